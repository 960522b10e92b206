#include "tsgen/core.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace tsgen {

int inverse_mod(int a, int n) {
    // extended Euclid
    int t = 0, new_t = 1;
    int r = n, new_r = imod(a, n);
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw InvalidParams("inverse_mod: not invertible");
    return imod(t, n);
}

std::string point_name(Point p) {
    if (p == kInf0) return "inf0";
    if (p == kInf1) return "inf1";
    return std::to_string(residue_of(p)) + "." + std::to_string(bit_of(p));
}

Point parse_point(const std::string& s, int n) {
    if (s == "inf0") return kInf0;
    if (s == "inf1") return kInf1;
    auto dot = s.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 2 != s.size())
        throw InvalidParams("parse_point: malformed point '" + s + "'");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == dot) continue;
        if (s[i] < '0' || s[i] > '9')
            throw InvalidParams("parse_point: malformed point '" + s + "'");
    }
    int r = std::stoi(s.substr(0, dot));
    int b = s[dot + 1] - '0';
    if (r < 0 || r >= n || (b != 0 && b != 1))
        throw InvalidParams("parse_point: out of range point '" + s + "'");
    return finite_point(r, b);
}

Block make_block(Point a, Point b, Point c) {
    Block blk{a, b, c};
    std::sort(blk.begin(), blk.end());
    if (blk[0] == blk[1] || blk[1] == blk[2])
        throw InvalidParams("make_block: repeated point");
    return blk;
}

bool block_contains(const Block& b, Point p) {
    return b[0] == p || b[1] == p || b[2] == p;
}

const char* step_name(Step s) {
    switch (s) {
        case Step::S1a: return "1a";
        case Step::S1b: return "1b";
        case Step::S1c: return "1c";
        case Step::S2: return "2";
        case Step::S3: return "3";
    }
    return "?";
}

Step parse_step(const std::string& s) {
    if (s == "1a") return Step::S1a;
    if (s == "1b") return Step::S1b;
    if (s == "1c") return Step::S1c;
    if (s == "2") return Step::S2;
    if (s == "3") return Step::S3;
    throw InvalidParams("parse_step: unknown step '" + s + "'");
}

void require_valid_n(int n) {
    if (n < 5 || (n % 6 != 1 && n % 6 != 5))
        throw InvalidParams("n must be >= 5 and congruent to 1 or 5 mod 6; got " +
                            std::to_string(n));
}

void require_valid_lambda(int n, int lambda) {
    require_valid_n(n);
    if (lambda == 2)
        throw InvalidParams("lambda=2 outside constructive scope; see prior work");
    if (lambda < 4 || lambda % 2 != 0 || lambda > 2 * n)
        throw InvalidParams("lambda must be even with 4 <= lambda <= 2n; got lambda=" +
                            std::to_string(lambda) + " for n=" + std::to_string(n));
}

ArcColoring::ArcColoring(int n, bool seeded, std::uint64_t seed,
                         std::vector<ArcColor> half)
    : n_(n), seeded_(seeded), seed_(seed), half_(std::move(half)) {}

ArcColoring ArcColoring::default_for(int n) {
    require_valid_n(n);
    return ArcColoring(n, false, 0,
                       std::vector<ArcColor>((n - 1) / 2, ArcColor::Red));
}

ArcColoring ArcColoring::seeded(int n, std::uint64_t seed) {
    require_valid_n(n);
    std::mt19937_64 rng(seed);
    std::vector<ArcColor> half((n - 1) / 2);
    for (auto& c : half)
        c = (rng() & 1) ? ArcColor::Red : ArcColor::Blue;
    return ArcColoring(n, true, seed, std::move(half));
}

ArcColor ArcColoring::color_of_h(int h) const {
    h = imod(h, n_);
    if (h == 0) throw InvalidParams("color_of_h: h must be nonzero");
    if (h <= (n_ - 1) / 2) return half_[h - 1];
    ArcColor c = half_[n_ - h - 1];
    return c == ArcColor::Red ? ArcColor::Blue : ArcColor::Red;
}

std::vector<Arc> arcs_of(int n, int g) {
    require_valid_n(n);
    if (g < 0 || g >= n) throw InvalidParams("arcs_of: class out of range");
    std::vector<Arc> arcs;
    arcs.reserve(n - 1);
    for (int h = 1; h < n; ++h)
        arcs.push_back(Arc{g, h, imod(h + g, n), imod(-2 * h + g, n)});
    return arcs;
}

Arc arc_between(int n, int tail, int head) {
    require_valid_n(n);
    if (tail < 0 || tail >= n || head < 0 || head >= n || tail == head)
        throw NotFound("arc_between: no arc joins these residues");
    int g = imod(static_cast<long long>(head + 2 * tail) * inverse_mod(3, n), n);
    int h = imod(tail - g, n);
    assert(h != 0 && imod(-2 * h + g, n) == head);
    return Arc{g, h, tail, head};
}

ArcColoring default_coloring(int n) { return ArcColoring::default_for(n); }

std::vector<std::array<int, 3>> class_bases(int n, int g) {
    std::vector<std::array<int, 3>> bases;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            int z = imod(3LL * g - x - y, n);
            if (z > y) bases.push_back({x, y, z});
        }
    }
    return bases;
}

int class_of_triple(int n, const std::array<int, 3>& t) {
    return imod(static_cast<long long>(t[0] + t[1] + t[2]) * inverse_mod(3, n), n);
}

namespace {

void push_block(TripleSystem& ts, Step step, int g, Point a, Point b, Point c) {
    ts.blocks.push_back(make_block(a, b, c));
    ts.origins.push_back(BlockOrigin{step, g});
}

} // namespace

TripleSystem class_design(int n, int g, const ArcColoring& coloring) {
    require_valid_n(n);
    if (g < 0 || g >= n) throw InvalidParams("class_design: class out of range");
    if (coloring.n() != n) throw InvalidParams("class_design: coloring is for a different n");

    TripleSystem ts;
    ts.n = n;
    ts.v = 2 * n + 2;
    ts.lambda = 2;

    auto bases = class_bases(n, g);

    // Step 1a: the base triples on the bit-0 copy of Z_n.
    for (const auto& base : bases)
        push_block(ts, Step::S1a, g, finite_point(base[0], 0),
                   finite_point(base[1], 0), finite_point(base[2], 0));

    // Step 1b: the seven nonzero bit patterns over each base.
    for (const auto& base : bases)
        for (int m = 1; m < 8; ++m)
            push_block(ts, Step::S1b, g, finite_point(base[0], m & 1),
                       finite_point(base[1], (m >> 1) & 1),
                       finite_point(base[2], (m >> 2) & 1));

    // Step 1c: two blocks per arc, joining the two copies of the tail.
    for (const Arc& e : arcs_of(n, g)) {
        push_block(ts, Step::S1c, g, finite_point(e.tail, 0),
                   finite_point(e.head, 0), finite_point(e.tail, 1));
        push_block(ts, Step::S1c, g, finite_point(e.tail, 0),
                   finite_point(e.head, 1), finite_point(e.tail, 1));
    }

    // Step 2: four blocks per arc through the infinity points; the red
    // pattern puts equal bit pairs on inf0, the blue pattern on inf1.
    for (const Arc& e : arcs_of(n, g)) {
        int x = coloring.color(e) == ArcColor::Red ? 0 : 1;
        push_block(ts, Step::S2, g, inf_point(x), finite_point(e.tail, 0),
                   finite_point(e.head, 0));
        push_block(ts, Step::S2, g, inf_point(x), finite_point(e.tail, 1),
                   finite_point(e.head, 1));
        push_block(ts, Step::S2, g, inf_point(1 - x), finite_point(e.tail, 0),
                   finite_point(e.head, 1));
        push_block(ts, Step::S2, g, inf_point(1 - x), finite_point(e.tail, 1),
                   finite_point(e.head, 0));
    }

    // Step 3: the K4 over {inf0, inf1, (g,0), (g,1)}.
    push_block(ts, Step::S3, g, kInf0, kInf1, finite_point(g, 0));
    push_block(ts, Step::S3, g, kInf0, kInf1, finite_point(g, 1));
    push_block(ts, Step::S3, g, kInf0, finite_point(g, 0), finite_point(g, 1));
    push_block(ts, Step::S3, g, kInf1, finite_point(g, 0), finite_point(g, 1));

    assert(static_cast<int>(ts.blocks.size()) == ts.v * (ts.v - 1) / 3);
    return ts;
}

TripleSystem union_design(int n, int lambda, const ArcColoring& coloring) {
    require_valid_lambda(n, lambda);
    if (coloring.n() != n) throw InvalidParams("union_design: coloring is for a different n");

    TripleSystem ts;
    ts.n = n;
    ts.v = 2 * n + 2;
    ts.lambda = lambda;
    for (int g = 0; g < lambda / 2; ++g) {
        TripleSystem cls = class_design(n, g, coloring);
        ts.blocks.insert(ts.blocks.end(), cls.blocks.begin(), cls.blocks.end());
        ts.origins.insert(ts.origins.end(), cls.origins.begin(), cls.origins.end());
    }
    return ts;
}

} // namespace tsgen
