#include "tsgen/gadgets.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <set>

#include "tsgen/big.hpp"

namespace tsgen {

// ===========================================================================
// gadgets
// ===========================================================================

Gadget make_gadget(int n, const Arc& arc, const ArcColoring& coloring) {
    if (coloring.n() != n) throw InvalidParams("make_gadget: coloring size mismatch");
    int a = arc.tail, b = arc.head;
    int c = coloring.color(arc) == ArcColor::Blue ? 1 : 0;
    Gadget g;
    g.arc = arc;
    for (int beta = 0; beta < 2; ++beta) {
        g.center[beta] = make_block(finite_point(a, 0), finite_point(a, 1),
                                    finite_point(b, beta));
        for (int x = 0; x < 2; ++x)
            g.leaf[beta][x] = make_block(inf_point(x),
                                         finite_point(a, beta ^ x ^ c),
                                         finite_point(b, beta));
    }
    return g;
}

bool gadget_leaf(const Gadget& g, const Block& b) {
    for (int beta = 0; beta < 2; ++beta)
        for (int x = 0; x < 2; ++x)
            if (g.leaf[beta][x] == b) return true;
    return false;
}

Block leaf_with(const Gadget& g, int inf_index, int residue, int bit) {
    Point want_inf = inf_point(inf_index);
    Point want_fin = finite_point(residue, bit);
    for (int beta = 0; beta < 2; ++beta)
        for (int x = 0; x < 2; ++x) {
            const Block& L = g.leaf[beta][x];
            if (block_contains(L, want_inf) && block_contains(L, want_fin)) return L;
        }
    throw NotFound("leaf_with: no leaf with that infinity point and point");
}

// ===========================================================================
// negabinary and connectivity walks
// ===========================================================================

std::vector<int> negabinary(long long s) {
    std::vector<int> digits;
    while (s != 0) {
        int d = s % 2 != 0 ? 1 : 0;
        digits.push_back(d);
        s = (s - d) / -2;
    }
    return digits;
}

namespace {

int mul_order(int a, int n) {
    long long acc = imod(a, n);
    if (acc == 0) throw InvalidParams("mul_order: not a unit");
    int ord = 1;
    while (acc != 1) {
        acc = acc * imod(a, n) % n;
        if (++ord > n) throw InvalidParams("mul_order: not a unit");
    }
    return ord;
}

Arc alpha_arc(int n, int g, int from) {
    int h = imod(from - g, n);
    assert(h != 0);
    return Arc{g, h, from, imod(g - 2LL * h, n)};
}

Arc beta_arc(int n, int g, int from) {
    int cls = imod(g + 1, n);
    int h = imod(from - cls, n);
    assert(h != 0);
    return Arc{cls, h, from, imod(cls - 2LL * h, n)};
}

// One +1 step by a closed-form word: T letters, letter i is beta exactly
// when digit T-i of the negabinary expansion of S is set, so the walk adds
// 3S = 1 mod n to the shifted coordinate. Fails (returns nothing) if an
// intermediate vertex makes a letter illegal.
std::optional<std::vector<Arc>> plus_one_word(int n, int g, int from, int T,
                                              long long S) {
    std::vector<int> digits = negabinary(S);
    if (static_cast<int>(digits.size()) > T) return std::nullopt;
    std::vector<Arc> arcs;
    int cur = from;
    for (int i = 1; i <= T; ++i) {
        int idx = T - i;
        int d = idx < static_cast<int>(digits.size()) ? digits[idx] : 0;
        if (d) {
            if (imod(cur - g, n) == 1) return std::nullopt;
            arcs.push_back(beta_arc(n, g, cur));
        } else {
            if (imod(cur - g, n) == 0) return std::nullopt;
            arcs.push_back(alpha_arc(n, g, cur));
        }
        cur = arcs.back().head;
    }
    if (cur != imod(from + 1, n)) return std::nullopt;
    return arcs;
}

// Shortest legal word from -> to (alpha preferred on ties).
std::vector<Arc> word_bfs(int n, int g, int from, int to) {
    std::vector<int> prev(n, -1);
    std::vector<Arc> via(n);
    std::queue<int> q;
    prev[from] = from;
    q.push(from);
    while (!q.empty() && prev[to] < 0) {
        int v = q.front();
        q.pop();
        std::vector<Arc> steps;
        if (imod(v - g, n) != 0) steps.push_back(alpha_arc(n, g, v));
        if (imod(v - g, n) != 1) steps.push_back(beta_arc(n, g, v));
        for (const Arc& arc : steps) {
            if (prev[arc.head] >= 0) continue;
            prev[arc.head] = v;
            via[arc.head] = arc;
            q.push(arc.head);
        }
    }
    if (prev[to] < 0)
        throw ConstructionFailure("connectivity_walk: digraph union not connected");
    std::vector<Arc> arcs;
    for (int v = to; v != from; v = prev[v]) arcs.push_back(via[v]);
    std::reverse(arcs.begin(), arcs.end());
    return arcs;
}

} // namespace

ConnectivityWalk connectivity_walk(int n, int g, int x, int y) {
    require_valid_n(n);
    if (g < 0 || g >= n || x < 0 || x >= n || y < 0 || y >= n)
        throw InvalidParams("connectivity_walk: arguments out of range");
    ConnectivityWalk walk{n, g, x, y, {}};
    if (x == y) return walk;

    int ord = mul_order(-2, n);
    int s0 = inverse_mod(3, n);
    long long even_rep = s0 % 2 == 0 ? s0 : s0 - n;

    int cur = x;
    int hops = imod(y - x, n);
    for (int hop = 0; hop < hops; ++hop) {
        int target = imod(cur + 1, n);
        std::optional<std::vector<Arc>> word;
        for (int m = 1; m <= 8 && !word; ++m)
            for (int k : {0, -1, 1, -2, 2, -3, 3}) {
                word = plus_one_word(n, g, cur, m * ord, even_rep + 2LL * k * n);
                if (word) break;
            }
        std::vector<Arc> arcs = word ? *word : word_bfs(n, g, cur, target);
        walk.arcs.insert(walk.arcs.end(), arcs.begin(), arcs.end());
        cur = target;
    }

    int at = x;
    for (const Arc& arc : walk.arcs) {
        if (arc.tail != at || (arc.g != g && arc.g != imod(g + 1, n)))
            throw ConstructionFailure("connectivity_walk: invalid step");
        at = arc.head;
    }
    if (at != y) throw ConstructionFailure("connectivity_walk: wrong endpoint");
    return walk;
}

// ===========================================================================
// Euler tour
// ===========================================================================

std::vector<Arc> euler_tour(int n, int t) {
    require_valid_n(n);
    if (t < 2 || t > n) throw InvalidParams("euler_tour: need 2 <= t <= n");

    std::vector<std::vector<Arc>> out(n);
    for (int g = 0; g < t; ++g)
        for (const Arc& arc : arcs_of(n, g)) out[arc.tail].push_back(arc);
    for (auto& lst : out)
        std::sort(lst.begin(), lst.end(), [](const Arc& a, const Arc& b) {
            return a.g != b.g ? a.g < b.g : a.h < b.h;
        });

    std::vector<std::size_t> ptr(n, 0);
    std::vector<int> vstack{0};
    std::vector<Arc> astack;
    std::vector<Arc> tour;
    while (!vstack.empty()) {
        int v = vstack.back();
        if (ptr[v] < out[v].size()) {
            const Arc& arc = out[v][ptr[v]++];
            vstack.push_back(arc.head);
            astack.push_back(arc);
        } else {
            vstack.pop_back();
            if (!astack.empty()) {
                tour.push_back(astack.back());
                astack.pop_back();
            }
        }
    }
    std::reverse(tour.begin(), tour.end());

    std::size_t total = static_cast<std::size_t>(t) * (n - 1);
    if (tour.size() != total)
        throw ConstructionFailure("euler_tour: arc digraph union not connected");
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < tour.size(); ++i) {
        if (!seen.emplace(tour[i].g, tour[i].h).second)
            throw ConstructionFailure("euler_tour: repeated arc");
        if (tour[i].head != tour[(i + 1) % tour.size()].tail)
            throw ConstructionFailure("euler_tour: not a closed trail");
    }

    // rotate the class-0 arc n-2 -> 4 to the end
    std::size_t idx = tour.size();
    for (std::size_t i = 0; i < tour.size(); ++i)
        if (tour[i].g == 0 && tour[i].tail == imod(n - 2, n)) {
            idx = i;
            break;
        }
    assert(idx < tour.size());
    std::rotate(tour.begin(), tour.begin() + idx + 1, tour.end());
    assert(tour.back().g == 0 && tour.back().head == imod(4, n));
    return tour;
}

// ===========================================================================
// Hamilton paths through gadget blocks
// ===========================================================================

std::vector<int> ham_path_search(const std::vector<std::vector<int>>& adj,
                                 const std::vector<int>& starts,
                                 const std::function<bool(int)>& end_ok) {
    int m = static_cast<int>(adj.size());
    std::vector<std::vector<int>> nbrs = adj;
    for (auto& lst : nbrs) std::sort(lst.begin(), lst.end());

    std::vector<int> path;
    std::vector<char> visited(m, 0);
    std::function<bool(int)> dfs = [&](int cur) -> bool {
        if (static_cast<int>(path.size()) == m) return end_ok(cur);
        for (int nb : nbrs[cur]) {
            if (visited[nb]) continue;
            visited[nb] = 1;
            path.push_back(nb);
            if (dfs(nb)) return true;
            path.pop_back();
            visited[nb] = 0;
        }
        return false;
    };
    for (int s : starts) {
        if (s < 0 || s >= m) continue;
        path.assign(1, s);
        std::fill(visited.begin(), visited.end(), 0);
        visited[s] = 1;
        if (dfs(s)) return path;
    }
    throw SearchExhausted("ham_path_search: no path");
}

namespace {

std::array<Block, 6> gadget_blocks(const Gadget& g) {
    return {g.center[0], g.center[1], g.leaf[0][0], g.leaf[0][1],
            g.leaf[1][0], g.leaf[1][1]};
}

// Hamilton path over the twelve blocks of two gadgets; starts tried in
// order, end must satisfy the predicate.
std::vector<Block> twelve_block_path(const Gadget& ga, const Gadget& gb,
                                     const std::vector<Block>& starts,
                                     const std::function<bool(const Block&)>& end_ok) {
    std::vector<Block> blocks;
    for (const Block& b : gadget_blocks(ga)) blocks.push_back(b);
    for (const Block& b : gadget_blocks(gb)) blocks.push_back(b);

    std::vector<std::vector<int>> adj(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (intersection_size(blocks[i], blocks[j]) == 2) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }

    std::vector<int> start_idx;
    for (const Block& s : starts)
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i] == s) start_idx.push_back(static_cast<int>(i));

    std::vector<int> path = ham_path_search(
        adj, start_idx, [&](int v) { return end_ok(blocks[v]); });
    std::vector<Block> out;
    for (int v : path) out.push_back(blocks[v]);
    return out;
}

struct GadgetRoles {
    Block b1, b2, a1, a2, a3, a4;
};

// lab encodes (beta1, a1x, a3x) as bits 2,1,0.
GadgetRoles roles_of(const Gadget& g, int lab) {
    int beta1 = (lab >> 2) & 1, a1x = (lab >> 1) & 1, a3x = lab & 1;
    GadgetRoles r;
    r.b1 = g.center[beta1];
    r.b2 = g.center[1 - beta1];
    r.a1 = g.leaf[beta1][a1x];
    r.a2 = g.leaf[beta1][1 - a1x];
    r.a3 = g.leaf[1 - beta1][a3x];
    r.a4 = g.leaf[1 - beta1][1 - a3x];
    return r;
}

// Three-block run of a gadget at slice position i; the second run of each
// gadget (barred = true) uses the sibling pattern so the return pass mirrors
// the forward pass.
std::array<Block, 3> run_of(const Gadget& g, int lab, int i, bool barred) {
    GadgetRoles r = roles_of(g, lab);
    int idx = i % 4;
    if (barred) idx ^= 1;
    switch (idx) {
    case 0: return {r.a1, r.b1, r.a2};
    case 1: return {r.a3, r.b2, r.a4};
    case 2: return {r.a4, r.b2, r.a3};
    default: return {r.a2, r.b1, r.a1};
    }
}

bool adjacent_blocks(const Block& a, const Block& b) {
    return intersection_size(a, b) == 2;
}

void validate_block_path(const std::vector<Block>& seq, std::size_t expect) {
    if (seq.size() != expect)
        throw ConstructionFailure("block path: wrong length");
    std::set<Block> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size())
        throw ConstructionFailure("block path: repeated block");
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (!adjacent_blocks(seq[i - 1], seq[i]))
            throw ConstructionFailure("block path: consecutive blocks not adjacent");
}

} // namespace

std::vector<Block> two_arc_path(const Gadget& g1, const Gadget& g2,
                                const Block* required_start) {
    // Fixed interleave over labelings; falls back to a direct search.
    for (int lab1 = 0; lab1 < 8; ++lab1) {
        GadgetRoles r1 = roles_of(g1, lab1);
        if (required_start && !(r1.a1 == *required_start)) continue;
        for (int lab2 = 0; lab2 < 8; ++lab2) {
            GadgetRoles r2 = roles_of(g2, lab2);
            std::vector<Block> seq = {r1.a1, r1.b1, r1.a2, r2.a3, r2.b2, r2.a4,
                                      r1.a4, r1.b2, r1.a3, r2.a2, r2.b1, r2.a1};
            bool ok = true;
            for (std::size_t i = 1; i < seq.size() && ok; ++i)
                ok = adjacent_blocks(seq[i - 1], seq[i]);
            if (ok) return seq;
        }
    }
    std::vector<Block> starts;
    if (required_start) {
        starts.push_back(*required_start);
    } else {
        for (const Block& b : gadget_blocks(g1))
            if (gadget_leaf(g1, b)) starts.push_back(b);
    }
    return twelve_block_path(g1, g2, starts,
                             [&](const Block& b) { return gadget_leaf(g2, b); });
}

std::vector<Block> trail_path(const std::vector<Gadget>& gadgets,
                              const Block* required_start) {
    int m = static_cast<int>(gadgets.size());
    if (m < 3) throw InvalidParams("trail_path: need at least three arcs");
    int last = m - 3;

    // Tail feasibility: for each labeling of the last chained arc, a
    // Hamilton path over the final two gadgets bridging its forward run to
    // its return run.
    std::array<std::optional<std::vector<Block>>, 8> tail;
    for (int lab = 0; lab < 8; ++lab) {
        Block fwd_end = run_of(gadgets[last], lab, last, false)[2];
        Block ret_start = run_of(gadgets[last], lab, last, true)[0];
        std::vector<Block> starts;
        for (const Gadget* g : {&gadgets[m - 2], &gadgets[m - 1]})
            for (const Block& b : gadget_blocks(*g))
                if (adjacent_blocks(fwd_end, b)) starts.push_back(b);
        try {
            tail[lab] = twelve_block_path(
                gadgets[m - 2], gadgets[m - 1], starts,
                [&](const Block& b) { return adjacent_blocks(b, ret_start); });
        } catch (const SearchExhausted&) {
        }
    }

    // Backward feasibility over labelings, then lexicographically first
    // forward reconstruction.
    std::vector<std::array<char, 8>> feasible(last + 1);
    for (int lab = 0; lab < 8; ++lab)
        feasible[last][lab] = tail[lab].has_value() ? 1 : 0;
    auto link_ok = [&](int i, int lab_a, int lab_b) {
        Block fwd_a = run_of(gadgets[i], lab_a, i, false)[2];
        Block fwd_b = run_of(gadgets[i + 1], lab_b, i + 1, false)[0];
        Block ret_b = run_of(gadgets[i + 1], lab_b, i + 1, true)[2];
        Block ret_a = run_of(gadgets[i], lab_a, i, true)[0];
        return adjacent_blocks(fwd_a, fwd_b) && adjacent_blocks(ret_b, ret_a);
    };
    for (int i = last - 1; i >= 0; --i)
        for (int lab = 0; lab < 8; ++lab) {
            char ok = 0;
            for (int lab2 = 0; lab2 < 8 && !ok; ++lab2)
                if (feasible[i + 1][lab2] && link_ok(i, lab, lab2)) ok = 1;
            feasible[i][lab] = ok;
        }

    std::vector<int> chosen(last + 1, -1);
    for (int lab = 0; lab < 8; ++lab) {
        if (!feasible[0][lab]) continue;
        if (required_start && !(roles_of(gadgets[0], lab).a1 == *required_start))
            continue;
        chosen[0] = lab;
        break;
    }
    if (chosen[0] < 0) throw SearchExhausted("trail_path: no feasible labeling");
    for (int i = 1; i <= last; ++i) {
        for (int lab = 0; lab < 8; ++lab)
            if (feasible[i][lab] && link_ok(i - 1, chosen[i - 1], lab)) {
                chosen[i] = lab;
                break;
            }
        assert(chosen[i] >= 0);
    }

    std::vector<Block> seq;
    for (int i = 0; i <= last; ++i)
        for (const Block& b : run_of(gadgets[i], chosen[i], i, false)) seq.push_back(b);
    for (const Block& b : *tail[chosen[last]]) seq.push_back(b);
    for (int i = last; i >= 0; --i)
        for (const Block& b : run_of(gadgets[i], chosen[i], i, true)) seq.push_back(b);

    validate_block_path(seq, static_cast<std::size_t>(m) * 6);
    if (required_start && !(seq.front() == *required_start))
        throw ConstructionFailure("trail_path: wrong start");
    if (!gadget_leaf(gadgets[0], seq.front()) || !gadget_leaf(gadgets[0], seq.back()))
        throw ConstructionFailure("trail_path: endpoints not leaves of the first arc");
    return seq;
}

// ===========================================================================
// the r-path
// ===========================================================================

namespace {

bool has_infinity(const Block& b) { return is_infinity(b[0]); }

int block_bit_at(const Block& b, int residue) {
    for (Point p : b)
        if (!is_infinity(p) && residue_of(p) == residue) return bit_of(p);
    throw NotFound("block_bit_at: residue not present");
}

// The leaf of g sharing the infinity point of prev and prev's point over
// the residue r.
Block partner_leaf(const Gadget& g, const Block& prev, int r) {
    int x = block_contains(prev, kInf0) ? 0 : 1;
    return leaf_with(g, x, r, block_bit_at(prev, r));
}

} // namespace

RPath r_path(int n, int lambda, const ArcColoring& coloring, const Block& A) {
    require_valid_n(n);
    require_valid_lambda(n, lambda);
    int t = lambda / 2;

    std::vector<Arc> tour = euler_tour(n, t);
    int k = static_cast<int>(tour.size());
    std::vector<Gadget> gadgets;
    gadgets.reserve(tour.size());
    for (const Arc& arc : tour) gadgets.push_back(make_gadget(n, arc, coloring));

    int pos = -1;
    for (int i = 0; i < k && pos < 0; ++i)
        if (gadget_leaf(gadgets[i], A)) pos = i;
    if (pos < 0) throw NotFound("r_path: block is not a leaf of any tour arc");
    int ell = pos + 1;

    std::vector<Block> seq;
    auto append_piece = [&](const std::vector<Block>& piece) {
        if (!seq.empty() && !adjacent_blocks(seq.back(), piece.front()))
            throw ConstructionFailure("r_path: pieces not adjacent");
        seq.insert(seq.end(), piece.begin(), piece.end());
    };
    auto run_pairs = [&](int from, int to) {
        for (int j = from; j < to; j += 2) {
            Block start = partner_leaf(gadgets[j], seq.back(), gadgets[j].arc.tail);
            append_piece(two_arc_path(gadgets[j], gadgets[j + 1], &start));
        }
    };
    auto leaf_of = [&](int i) {
        return [this_gadget = gadgets[i]](const Block& b) {
            return gadget_leaf(this_gadget, b);
        };
    };

    if (ell % 2 == 0) {
        if (ell == 2) {
            seq = twelve_block_path(gadgets[1], gadgets[0], {A}, leaf_of(1));
        } else {
            std::vector<Gadget> slice(gadgets.rend() - ell, gadgets.rend());
            seq = trail_path(slice, &A);
        }
        run_pairs(ell, k);
    } else if (ell == 1) {
        std::vector<Gadget> slice(gadgets.begin(), gadgets.end() - 2);
        seq = trail_path(slice, &A);
        Block start = partner_leaf(gadgets[k - 1], seq.back(), gadgets[k - 1].arc.head);
        append_piece(twelve_block_path(gadgets[k - 2], gadgets[k - 1], {start},
                                       leaf_of(k - 1)));
    } else {
        if (ell == 3) {
            seq = twelve_block_path(gadgets[2], gadgets[1], {A}, leaf_of(2));
        } else {
            std::vector<Gadget> slice(gadgets.rend() - ell, gadgets.rend() - 1);
            seq = trail_path(slice, &A);
        }
        run_pairs(ell, k - 1);
        Block start = partner_leaf(gadgets[k - 1], seq.back(), gadgets[k - 1].arc.tail);
        append_piece(twelve_block_path(gadgets[k - 1], gadgets[0], {start},
                                       leaf_of(k - 1)));
    }

    // Splice the four blocks over {inf0, inf1, (g,0), (g,1)} of every class
    // across a leaf-center adjacency of an arc with tail g.
    for (int g = 0; g < t; ++g) {
        std::array<Block, 4> four = {
            make_block(kInf0, kInf1, finite_point(g, 0)),
            make_block(kInf0, kInf1, finite_point(g, 1)),
            make_block(kInf0, finite_point(g, 0), finite_point(g, 1)),
            make_block(kInf1, finite_point(g, 0), finite_point(g, 1))};
        auto center_tail_g = [&](const Block& b) {
            return !has_infinity(b) && block_contains(b, finite_point(g, 0)) &&
                   block_contains(b, finite_point(g, 1));
        };
        bool spliced = false;
        for (std::size_t i = 0; i + 1 < seq.size() && !spliced; ++i) {
            bool fwd = center_tail_g(seq[i + 1]) && has_infinity(seq[i]);
            bool bwd = center_tail_g(seq[i]) && has_infinity(seq[i + 1]);
            if (!fwd && !bwd) continue;
            std::array<int, 4> perm = {0, 1, 2, 3};
            do {
                if (adjacent_blocks(seq[i], four[perm[0]]) &&
                    adjacent_blocks(four[perm[0]], four[perm[1]]) &&
                    adjacent_blocks(four[perm[1]], four[perm[2]]) &&
                    adjacent_blocks(four[perm[2]], four[perm[3]]) &&
                    adjacent_blocks(four[perm[3]], seq[i + 1])) {
                    std::vector<Block> ins = {four[perm[0]], four[perm[1]],
                                              four[perm[2]], four[perm[3]]};
                    seq.insert(seq.begin() + i + 1, ins.begin(), ins.end());
                    spliced = true;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (!spliced)
            throw ConstructionFailure("r_path: no splice point for class " +
                                      std::to_string(g));
    }

    validate_block_path(seq, static_cast<std::size_t>(t) * (6 * n - 2));
    if (!(seq.front() == A)) throw ConstructionFailure("r_path: wrong start");
    if (!gadget_leaf(gadgets[k - 1], seq.back()))
        throw ConstructionFailure("r_path: end is not a leaf of the terminal arc");
    return RPath{std::move(seq), tour.back()};
}

} // namespace tsgen
