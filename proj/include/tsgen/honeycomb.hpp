#pragma once

// Honeycomb graphs over the Step-1a base triples: vertices are residue
// triples, edges join triples sharing two residues. For a class pair
// {g-1, g} the graph is subcubic, and this module constructs the Hamilton
// walks over one, two, three, and t classes whose traversed edge sets are
// spanning trees of maximum degree <= 6. The two-class walks come from a
// coordinate system U_{i,j} / Ubar_{i,j} on the pair honeycomb; walks for
// large n embed the walk for n-6 through the coordinate map
// (i,j) -> (i+2,j). Everything constructed here is validated on the spot:
// coverage, junction adjacency, acyclicity, and degree bounds all throw
// ConstructionFailure when violated.

#include <array>
#include <utility>
#include <vector>

#include "tsgen/core.hpp"

namespace tsgen {

struct ResidueTriple {
    std::array<int, 3> r;  // sorted ascending, values in [0, n)
    int cls;               // derived: (r0+r1+r2) * 3^-1 mod n

    friend bool operator==(const ResidueTriple& a, const ResidueTriple& b) {
        return a.r == b.r;
    }
    friend bool operator<(const ResidueTriple& a, const ResidueTriple& b) {
        return a.r < b.r;
    }
};

// Sorts the residues, reduces them mod n, rejects repeats.
ResidueTriple make_residue_triple(int n, long long a, long long b, long long c);

// Number of residues two triples share (0..3).
int triple_intersection(const ResidueTriple& a, const ResidueTriple& b);

struct HoneycombGraph {
    int n;
    std::vector<int> classes;
    std::vector<ResidueTriple> verts;        // sorted ascending
    std::vector<std::pair<int, int>> edges;  // i < j
    std::vector<std::vector<int>> adj;       // sorted neighbor lists

    // Index of a vertex, or -1.
    int index_of(const ResidueTriple& t) const;
};

// The graph on all Step-1a triples of the given classes.
HoneycombGraph step1a_graph(int n, const std::vector<int>& classes);

// The designated endpoints of the {g1, g2} pair walk:
// Z1 = {3g1-2g2, g2, -3g1+4g2} (class g2), Z2 = {-2g1+3g2, g1, 4g1-3g2}
// (class g1). For consecutive classes both are degree-1 vertices of the
// pair honeycomb.
std::pair<ResidueTriple, ResidueTriple> z_endpoints(int n, int g1, int g2);

// ---------------------------------------------------------------------------
// the U coordinate system on H^n_{g-1,g}
// ---------------------------------------------------------------------------

struct UCoord {
    int i;
    int j;
    bool bar;

    friend bool operator==(const UCoord& a, const UCoord& b) {
        return a.i == b.i && a.j == b.j && a.bar == b.bar;
    }
};

// Largest regular layer index: (n-7)/3 for n = 1 mod 6, (n-8)/3 for
// n = 5 mod 6.
int u_layer_max(int n);

// True if (i, j) is one of the special coordinates: (0,5) for n = 1 mod 6,
// (0,6) and (0,7) for n = 5 mod 6.
bool u_special(int n, int i, int j);

// The residue triple at a coordinate. Regular range: 0 <= i <= u_layer_max,
// 1 <= j <= 3i+4 (n = 1 mod 6) or 3i+5 (n = 5 mod 6); the specials extend
// layer 0. Barred coordinates are the image of x -> 2g-1-x. Throws
// IndexOutOfRange outside the range. Only n >= 11 has coordinates.
ResidueTriple u_coord(int n, int g, const UCoord& c);

// Every in-range coordinate (bars included) in deterministic order. The
// coordinates are pairwise distinct as vertices and cover H^n_{g-1,g}
// exactly.
std::vector<UCoord> u_inventory(int n);

// ---------------------------------------------------------------------------
// walks
// ---------------------------------------------------------------------------

struct HamWalk {
    int n;
    std::vector<ResidueTriple> seq;
};

// Checks that `walk` visits every vertex of `graph` at least once, moves
// only along edges, starts and ends at the given vertices, and that its
// traversed edge set is a spanning tree with maximum degree <= max_degree.
// Throws ConstructionFailure otherwise.
void require_spanning_tree_walk(const HoneycombGraph& graph, const HamWalk& walk,
                                const ResidueTriple& first,
                                const ResidueTriple& last, int max_degree);

// (Z1, Z2) walk over H^n_{g-1,g} for the four explicit sizes n in
// {5, 7, 11, 13}: found by bounded deterministic search minimizing repeated
// steps, restricted (for 11 and 13, which seed the recursion) to edges
// stable under the coordinate embedding.
HamWalk base_walk(int n, int g);

// (Z1, Z2) walk over H^n_{g-1,g} for any valid n: explicit segments plus
// the embedded walk for n-6.
HamWalk pair_walk(int n, int g);

// The pair walk for {g-1, g} extended over class g+1 by pendant detours:
// each class-(g+1) triple is attached at its first eligible neighbor
// below (never the walk's first vertex) and visited by a there-and-back
// detour.
HamWalk extend_triple_walk(int n, int g);

// (Z, Y) walk over classes {0..t-1}: pair walks for (0,1), (2,3), ...
// joined at their endpoints, the last segment extended over the final class
// when t is odd.
HamWalk multi_walk(int n, int t);

struct SpanningTree {
    int n;
    int t;
    std::vector<ResidueTriple> verts;   // sorted; Z removed
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
};

// Drops the initial vertex Z from a multi walk and returns the edge-induced
// spanning tree of H minus Z. Throws ConstructionFailure if Z recurs, some
// vertex is missed, or the degree bound 6 fails.
SpanningTree walk_to_tree(int n, int t, const HamWalk& walk);

} // namespace tsgen
