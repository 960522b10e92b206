// On-disk form of a generated design: a JSON document carrying the
// parameters, the coloring mode, the named points, every block with its
// construction origin, and the Gray-code ordering of the blocks.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsgen/assemble.hpp"
#include "tsgen/core.hpp"

namespace tsgen {

struct DesignFile {
    int n = 0;
    int lambda = 0;
    bool seeded = false;
    std::uint64_t seed = 0;
    std::vector<Block> blocks;          // canonical emission order
    std::vector<BlockOrigin> origins;   // parallel to blocks
    std::vector<std::size_t> gray_code; // permutation of block indices
};

DesignFile design_file_of(const Assembly& assembly, const ArcColoring& coloring);

// Two-space-indented JSON with a trailing newline; key order is fixed, so
// equal designs serialize byte-identically.
std::string design_to_json(const DesignFile& file);

// Throws InvalidParams on malformed documents.
DesignFile design_from_json(const std::string& text);

// Line-oriented listing for human consumption.
std::string design_to_text(const DesignFile& file);

} // namespace tsgen
