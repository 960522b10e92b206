#pragma once

// Core types for triple systems on 2n+2 points: the point set {inf0, inf1} u
// (Z_n x {0,1}), blocks as sorted point triples, the class digraphs D'_g with
// their red/blue arc colorings, and the five-step block construction that
// turns one class into a TS(2n+2, 2) and t = lambda/2 classes into a simple
// TS(2n+2, lambda).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tsgen/errors.hpp"

namespace tsgen {

// ---------------------------------------------------------------------------
// modular arithmetic helpers
// ---------------------------------------------------------------------------

// x reduced into [0, n).
inline int imod(long long x, int n) {
    int r = static_cast<int>(x % n);
    return r < 0 ? r + n : r;
}

// Multiplicative inverse of a modulo n (gcd(a, n) must be 1).
int inverse_mod(int a, int n);

// ---------------------------------------------------------------------------
// points and blocks
// ---------------------------------------------------------------------------

// Point codes: 0 = inf0, 1 = inf1, 2 + 2*r + b = (r, b) for r in Z_n,
// b in {0,1}. The code order (inf0 < inf1 < 0.0 < 0.1 < 1.0 < ...) is the
// canonical point order used everywhere.
using Point = std::uint16_t;

constexpr Point kInf0 = 0;
constexpr Point kInf1 = 1;

constexpr Point inf_point(int index) { return static_cast<Point>(index); }
constexpr Point finite_point(int r, int b) {
    return static_cast<Point>(2 + 2 * r + b);
}
constexpr bool is_infinity(Point p) { return p < 2; }
constexpr int residue_of(Point p) { return (p - 2) / 2; }
constexpr int bit_of(Point p) { return (p - 2) % 2; }

std::string point_name(Point p);
// Parses "inf0", "inf1" or "<residue>.<bit>" with residue < n.
Point parse_point(const std::string& s, int n);

// A block is a sorted triple of distinct point codes.
using Block = std::array<Point, 3>;

Block make_block(Point a, Point b, Point c);
bool block_contains(const Block& b, Point p);

enum class Step : std::uint8_t { S1a, S1b, S1c, S2, S3 };
const char* step_name(Step s);
Step parse_step(const std::string& s);

struct BlockOrigin {
    Step step;
    int cls;  // class g in [0, n)
};

// ---------------------------------------------------------------------------
// parameter validation
// ---------------------------------------------------------------------------

// n must be >= 5 and congruent to 1 or 5 mod 6 (equivalently v = 2n+2 is
// 0 or 4 mod 12). Throws InvalidParams otherwise.
void require_valid_n(int n);

// lambda must be even with 4 <= lambda <= 2n. lambda = 2 is rejected with
// the dedicated message "lambda=2 outside constructive scope; see prior
// work". Throws InvalidParams otherwise.
void require_valid_lambda(int n, int lambda);

// ---------------------------------------------------------------------------
// arcs and colorings
// ---------------------------------------------------------------------------

// The class-g digraph D'_g has one arc per h in Z_n \ {0}: tail h + g,
// head -2h + g. Arcs with parameters h and -h form an "opposite" pair.
struct Arc {
    int g;     // class
    int h;     // parameter, 1 <= h <= n-1
    int tail;  // (h + g) mod n
    int head;  // (-2h + g) mod n
};

enum class ArcColor : std::uint8_t { Red, Blue };

// A red/blue coloring of the opposite pairs, one color choice per pair
// {h, n-h}. The same coloring applies to every class: the reversal of the
// class-g arc with parameter h is the class-(g-h) arc with parameter -h,
// and reversed arcs must receive opposite colors or Step 2 would emit the
// same block from two classes. Class-independence is exactly what makes
// that hold for every pair of classes at once.
class ArcColoring {
  public:
    static ArcColoring default_for(int n);
    static ArcColoring seeded(int n, std::uint64_t seed);

    int n() const { return n_; }
    bool is_seeded() const { return seeded_; }
    std::uint64_t seed() const { return seed_; }

    // Color of the arc with parameter h (any h in [1, n-1]).
    ArcColor color_of_h(int h) const;
    ArcColor color(const Arc& a) const { return color_of_h(a.h); }

  private:
    ArcColoring(int n, bool seeded, std::uint64_t seed,
                std::vector<ArcColor> half);
    int n_;
    bool seeded_;
    std::uint64_t seed_;
    std::vector<ArcColor> half_;  // index h-1 for h in [1, (n-1)/2]
};

// The n-1 arcs of D'_g in canonical order (h ascending from 1).
std::vector<Arc> arcs_of(int n, int g);

// The arc from `tail` to `head` if both lie in [0, n) and such an arc exists
// in some class; its class is uniquely (head + 2*tail) / 3 mod n. Throws
// NotFound when tail == head (no class has loops).
Arc arc_between(int n, int tail, int head);

ArcColoring default_coloring(int n);

// ---------------------------------------------------------------------------
// the construction
// ---------------------------------------------------------------------------

struct TripleSystem {
    int n;
    int v;       // 2n + 2
    int lambda;  // 2 per class in the union
    std::vector<Block> blocks;
    std::vector<BlockOrigin> origins;  // parallel to blocks
};

// All class-g base triples {x, y, z} of residues with x+y+z = 3g (mod n),
// sorted ascending, in lexicographic order.
std::vector<std::array<int, 3>> class_bases(int n, int g);

// The class of a residue triple (sum * 3^-1 mod n).
int class_of_triple(int n, const std::array<int, 3>& triple);

// One class: the TS(2n+2, 2) built from class g's bases and arcs. Blocks are
// emitted in construction order: Step 1a (bases lexicographic), Step 1b
// (per base, bit masks 1..7 applied to the sorted base), Step 1c and Step 2
// (arcs by h ascending), Step 3.
TripleSystem class_design(int n, int g, const ArcColoring& coloring);

// The union of classes 0 .. lambda/2 - 1: a simple TS(2n+2, lambda).
TripleSystem union_design(int n, int lambda, const ArcColoring& coloring);

} // namespace tsgen
