// Gray codes on the 3-cube and the product cycle over a spanning tree:
// every vertex of a degree-bounded tree carries a fiber of eight 3-bit
// codes, and the product is toured by an 8-cycle on the root fiber with a
// Hamilton path of each child fiber spliced across one cube edge of its
// parent.
#pragma once

#include <utility>
#include <vector>

#include "tsgen/errors.hpp"
#include "tsgen/honeycomb.hpp"

namespace tsgen {

// Hamilton path a -> b through all 8 codes of the 3-cube; exists exactly
// when a and b differ in an odd number of bits. Deterministic (smallest
// flipped bit first). Throws NoPath otherwise.
std::vector<int> cube_ham_path(int a, int b);

// Closed tour of (tree vertex, 3-bit code) pairs covering every pair once.
struct TreeCycle {
    int root = 0;                          // vertex whose fiber seeds the cycle
    std::vector<std::pair<int, int>> seq;  // cyclic; consecutive entries share
                                           // a vertex across a cube edge or a
                                           // code across a tree edge
};

// Builds the product cycle. Requires max degree 6; each splice consumes one
// cube edge of the parent fiber (8 available on the root cycle, 7 on any
// spliced path), so attachments never run dry.
TreeCycle tree_cube_cycle(const SpanningTree& tree);

} // namespace tsgen
