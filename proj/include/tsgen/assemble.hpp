// End-to-end generation: the union design together with a cyclic ordering
// of all its blocks in which consecutive blocks share exactly two points.
// The cycle is stitched from three parts: the product tour over the
// spanning-tree fibers, a path through every arc-gadget block, and the
// eight-block fiber over the dropped vertex Z, joined by four crafted seam
// blocks.
#pragma once

#include <cstddef>
#include <vector>

#include "tsgen/core.hpp"

namespace tsgen {

struct AssemblyParts {
    std::size_t product_blocks;  // fibers over the spanning tree
    std::size_t trail_blocks;    // arc gadgets plus the class splices
    std::size_t fiber_blocks;    // the eight blocks over Z
};

struct Assembly {
    TripleSystem design;
    std::vector<std::size_t> order;  // permutation of design.blocks indices
    AssemblyParts parts;
};

// Deterministic for fixed (n, lambda, coloring).
Assembly assemble(int n, int lambda, const ArcColoring& coloring);

} // namespace tsgen
