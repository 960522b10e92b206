#pragma once

// Block intersection graphs: the k-BIG of a block list has the blocks as
// vertices and an edge wherever two blocks share exactly k points. The
// 2-BIG is the graph whose Hamilton cycles are the cyclic Gray codes this
// library produces. Also: deterministic DOT export for graphs built here.

#include <string>
#include <vector>

#include "tsgen/core.hpp"

namespace tsgen {

// Number of points two blocks share (0..3; 3 means equal).
int intersection_size(const Block& a, const Block& b);

struct BigGraph {
    int k;
    std::vector<Block> blocks;                  // vertex i is blocks[i]
    std::vector<std::pair<int, int>> edges;     // i < j, lexicographic
    std::vector<std::vector<int>> adj;          // sorted neighbor lists
};

// Builds the k-BIG for k in {0, 1, 2}. Throws DuplicateBlocks if the block
// list contains a repeat (the designs here are simple, so a repeat is
// always caller error).
BigGraph build_kbig(const std::vector<Block>& blocks, int k);

// Generic deterministic DOT rendering: nodes 0..N-1 with the given labels,
// edges in the given order. `directed` selects digraph/graph syntax.
std::string render_dot(const std::string& name,
                       const std::vector<std::string>& node_labels,
                       const std::vector<std::pair<int, int>>& edges,
                       bool directed);

// DOT text for a k-BIG; node labels are "p q r" point-name triples.
std::string export_dot(const BigGraph& graph, const std::string& name);

} // namespace tsgen
