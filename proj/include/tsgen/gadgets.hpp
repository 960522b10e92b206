// Arc gadgets and trails through them. Every colored arc a -> b owns six
// blocks: two centers {(a,0),(a,1),(b,beta)} and four leaves joining an
// infinity point to one point over a and one over b. Consecutive arcs of an
// Euler tour hand a shared residue from head to tail, which lets the six
// blocks of every arc be threaded into one long path; the four blocks over
// {inf0, inf1, (g,0), (g,1)} are spliced in afterwards, one class at a time.
#pragma once

#include <functional>
#include <vector>

#include "tsgen/core.hpp"
#include "tsgen/errors.hpp"

namespace tsgen {

struct Gadget {
    Arc arc;
    // center[beta] = {(a,0),(a,1),(b,beta)}
    std::array<Block, 2> center;
    // leaf[beta][x] = the block containing inf_x and (b,beta)
    std::array<std::array<Block, 2>, 2> leaf;
};

Gadget make_gadget(int n, const Arc& arc, const ArcColoring& coloring);

// True if b is one of the four leaves of g.
bool gadget_leaf(const Gadget& g, const Block& b);

// The unique leaf containing inf_x and the point (residue, bit).
// Throws NotFound if the gadget has no such leaf.
Block leaf_with(const Gadget& g, int inf_index, int residue, int bit);

// Least-significant-digit-first negabinary (base -2) digits; 0 -> {}.
std::vector<int> negabinary(long long s);

// Walk in the union of the class-g and class-(g+1) arc digraphs from x to
// y. Each +1 step follows an alpha/beta word determined by the negabinary
// digits of an even representative of 1/3 mod n; words whose intermediate
// vertices would make a step illegal are replaced by a shortest legal
// detour. Deterministic.
struct ConnectivityWalk {
    int n, g, x, y;
    std::vector<Arc> arcs;  // consecutive: head == next tail; empty if x == y
};
ConnectivityWalk connectivity_walk(int n, int g, int x, int y);

// Closed Euler tour of all arcs of classes 0..t-1 (each class is a
// functional digraph with in-degree = out-degree = t at every vertex after
// the union). Rotated so the last arc is the class-0 arc n-2 -> 4.
std::vector<Arc> euler_tour(int n, int t);

// Deterministic Hamilton path search over a small block adjacency graph.
// Tries the given start vertices in order; the path must end on a vertex
// satisfying end_ok. Returns vertex indices; throws SearchExhausted.
std::vector<int> ham_path_search(const std::vector<std::vector<int>>& adj,
                                 const std::vector<int>& starts,
                                 const std::function<bool(int)>& end_ok);

// Hamilton path through the twelve blocks of two consecutive gadgets,
// starting at a leaf of g1 and ending at a leaf of g2. If required_start is
// non-null the path starts there.
std::vector<Block> two_arc_path(const Gadget& g1, const Gadget& g2,
                                const Block* required_start);

// Hamilton path through all six-block gadgets of the given arc sequence
// (consecutive arcs must share a residue); both endpoints are leaves of
// arcs.front(). If required_start is non-null the path starts there.
// Requires at least three arcs.
std::vector<Block> trail_path(const std::vector<Gadget>& gadgets,
                              const Block* required_start);

// Hamilton path through all step-1c, step-2 and step-3 blocks of classes
// 0..lambda/2-1, starting at the leaf block A and ending at a leaf of the
// tour's terminal arc n-2 -> 4 (so the final block meets {1,4,n-2} in two
// points).
struct RPath {
    std::vector<Block> seq;
    Arc terminal_arc;
};
RPath r_path(int n, int lambda, const ArcColoring& coloring, const Block& A);

} // namespace tsgen
