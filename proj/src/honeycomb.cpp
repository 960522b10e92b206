#include "tsgen/honeycomb.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <set>

namespace tsgen {

// ===========================================================================
// triples and graphs
// ===========================================================================

ResidueTriple make_residue_triple(int n, long long a, long long b, long long c) {
    ResidueTriple t;
    t.r = {imod(a, n), imod(b, n), imod(c, n)};
    std::sort(t.r.begin(), t.r.end());
    if (t.r[0] == t.r[1] || t.r[1] == t.r[2])
        throw ConstructionFailure("make_residue_triple: repeated residue");
    t.cls = class_of_triple(n, t.r);
    return t;
}

int triple_intersection(const ResidueTriple& a, const ResidueTriple& b) {
    int count = 0;
    for (int x : a.r)
        if (x == b.r[0] || x == b.r[1] || x == b.r[2]) ++count;
    return count;
}

int HoneycombGraph::index_of(const ResidueTriple& t) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), t);
    if (it == verts.end() || !(*it == t)) return -1;
    return static_cast<int>(it - verts.begin());
}

HoneycombGraph step1a_graph(int n, const std::vector<int>& classes) {
    require_valid_n(n);
    HoneycombGraph graph;
    graph.n = n;
    graph.classes = classes;
    for (int g : classes) {
        if (g < 0 || g >= n) throw InvalidParams("step1a_graph: class out of range");
        for (const auto& base : class_bases(n, g))
            graph.verts.push_back(make_residue_triple(n, base[0], base[1], base[2]));
    }
    std::sort(graph.verts.begin(), graph.verts.end());
    for (std::size_t i = 1; i < graph.verts.size(); ++i)
        if (graph.verts[i] == graph.verts[i - 1])
            throw InvalidParams("step1a_graph: repeated class");

    int m = static_cast<int>(graph.verts.size());
    graph.adj.assign(m, {});
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (triple_intersection(graph.verts[i], graph.verts[j]) == 2) {
                graph.edges.emplace_back(i, j);
                graph.adj[i].push_back(j);
                graph.adj[j].push_back(i);
            }
        }
    }
    return graph;
}

std::pair<ResidueTriple, ResidueTriple> z_endpoints(int n, int g1, int g2) {
    require_valid_n(n);
    ResidueTriple z1 = make_residue_triple(n, 3LL * g1 - 2LL * g2, g2,
                                           -3LL * g1 + 4LL * g2);
    ResidueTriple z2 = make_residue_triple(n, -2LL * g1 + 3LL * g2, g1,
                                           4LL * g1 - 3LL * g2);
    return {z1, z2};
}

// ===========================================================================
// U coordinates
// ===========================================================================

int u_layer_max(int n) {
    require_valid_n(n);
    if (n < 11) throw IndexOutOfRange("u_layer_max: no coordinates below n=11");
    return n % 6 == 1 ? (n - 7) / 3 : (n - 8) / 3;
}

bool u_special(int n, int i, int j) {
    if (i != 0) return false;
    if (n % 6 == 1) return j == 5;
    return j == 6 || j == 7;
}

namespace {

// Offsets c with element = g + c; exact integers, independent of n within a
// residue class mod 6.
std::array<long long, 3> u_offsets(int n_mod6, int i, int j) {
    if (n_mod6 == 1) {
        if (i == 0 && j == 5) return {2, -1, -4};
        if (j % 2 == 1)
            return {3LL * i + 5, (-3LL * j + 6 * i + 7) / 2,
                    (3LL * j - 12 * i - 23) / 2};
        return {3LL * i + 5, (-3LL * j + 6 * i + 10) / 2,
                (3LL * j - 12 * i - 20) / 2};
    }
    if (i == 0 && j == 6) return {5, -1, -4};
    if (i == 0 && j == 7) return {2, -1, -4};
    if (j % 2 == 1)
        return {(-3LL * j + 12 * i + 25) / 2, (3LL * j - 6 * i - 11) / 2,
                -3LL * i - 7};
    return {(-3LL * j + 12 * i + 22) / 2, (3LL * j - 6 * i - 14) / 2,
            -3LL * i - 7};
}

// Offsets with the bar map applied (x -> 2g-1-x sends g+c to g+(-1-c)).
std::array<long long, 3> u_offsets(int n_mod6, const UCoord& c) {
    auto offs = u_offsets(n_mod6, c.i, c.j);
    if (c.bar)
        for (auto& o : offs) o = -1 - o;
    return offs;
}

// Evaluates a coordinate without range checking; out-of-range layers wrap
// onto barred in-range vertices mod n, which is exactly what the explicit
// walk segments rely on.
ResidueTriple u_eval_raw(int n, int g, const UCoord& c) {
    auto offs = u_offsets(n % 6, c);
    return make_residue_triple(n, g + offs[0], g + offs[1], g + offs[2]);
}

int u_jmax(int n, int i) { return n % 6 == 1 ? 3 * i + 4 : 3 * i + 5; }

} // namespace

ResidueTriple u_coord(int n, int g, const UCoord& c) {
    require_valid_n(n);
    if (n < 11) throw IndexOutOfRange("u_coord: no coordinates below n=11");
    int imax = u_layer_max(n);
    bool regular = c.i >= 0 && c.i <= imax && c.j >= 1 && c.j <= u_jmax(n, c.i);
    if (!regular && !u_special(n, c.i, c.j))
        throw IndexOutOfRange("u_coord: coordinate (" + std::to_string(c.i) + "," +
                              std::to_string(c.j) + ") out of range for n=" +
                              std::to_string(n));
    return u_eval_raw(n, g, c);
}

std::vector<UCoord> u_inventory(int n) {
    require_valid_n(n);
    int imax = u_layer_max(n);
    int extra = n % 6 == 1 ? 1 : 2;  // specials extend layer 0
    std::vector<UCoord> coords;
    for (int bar = 0; bar < 2; ++bar)
        for (int i = 0; i <= imax; ++i) {
            int top = u_jmax(n, i) + (i == 0 ? extra : 0);
            for (int j = 1; j <= top; ++j)
                coords.push_back(UCoord{i, j, bar != 0});
        }
    return coords;
}

// ===========================================================================
// walk validation
// ===========================================================================

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int m) : parent(m) {
        for (int i = 0; i < m; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false if already joined
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::string triple_str(const ResidueTriple& t) {
    return "{" + std::to_string(t.r[0]) + "," + std::to_string(t.r[1]) + "," +
           std::to_string(t.r[2]) + "}";
}

} // namespace

void require_spanning_tree_walk(const HoneycombGraph& graph, const HamWalk& walk,
                                const ResidueTriple& first,
                                const ResidueTriple& last, int max_degree) {
    if (walk.seq.empty()) throw ConstructionFailure("walk: empty");
    if (!(walk.seq.front() == first))
        throw ConstructionFailure("walk: starts at " + triple_str(walk.seq.front()) +
                                  ", expected " + triple_str(first));
    if (!(walk.seq.back() == last))
        throw ConstructionFailure("walk: ends at " + triple_str(walk.seq.back()) +
                                  ", expected " + triple_str(last));

    int m = static_cast<int>(graph.verts.size());
    std::vector<int> degree(m, 0);
    std::vector<char> seen(m, 0);
    std::set<std::pair<int, int>> tree;
    UnionFind uf(m);

    int prev = -1;
    for (const ResidueTriple& t : walk.seq) {
        int idx = graph.index_of(t);
        if (idx < 0)
            throw ConstructionFailure("walk: " + triple_str(t) + " is not a vertex");
        seen[idx] = 1;
        if (prev >= 0) {
            if (triple_intersection(graph.verts[prev], graph.verts[idx]) != 2)
                throw ConstructionFailure("walk: step " + triple_str(graph.verts[prev]) +
                                          " -> " + triple_str(t) + " is not an edge");
            auto e = std::minmax(prev, idx);
            if (tree.insert(e).second) {
                if (!uf.join(prev, idx))
                    throw ConstructionFailure("walk: edge set contains a cycle through " +
                                              triple_str(t));
                if (++degree[e.first] > max_degree || ++degree[e.second] > max_degree)
                    throw ConstructionFailure("walk: degree bound " +
                                              std::to_string(max_degree) +
                                              " exceeded at " + triple_str(t));
            }
        }
        prev = idx;
    }
    for (int i = 0; i < m; ++i)
        if (!seen[i])
            throw ConstructionFailure("walk: misses vertex " + triple_str(graph.verts[i]));
    if (static_cast<int>(tree.size()) != m - 1)
        throw ConstructionFailure("walk: traversed " + std::to_string(tree.size()) +
                                  " edges over " + std::to_string(m) +
                                  " vertices, expected a spanning tree");
}

// ===========================================================================
// base walks (n in {5,7,11,13}): bounded deterministic search
// ===========================================================================

namespace {

// Canonical in-range coordinates of every vertex of H^n_{0,1}.
const std::map<std::array<int, 3>, UCoord>& coord_index(int n) {
    static std::mutex mu;
    static std::map<int, std::map<std::array<int, 3>, UCoord>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::map<std::array<int, 3>, UCoord> index;
    for (const UCoord& c : u_inventory(n)) {
        ResidueTriple t = u_coord(n, 1, c);
        if (!index.emplace(t.r, c).second)
            throw ConstructionFailure("coord_index: coordinate collision at " +
                                      triple_str(t));
    }
    std::size_t expected = static_cast<std::size_t>(n - 1) * (n - 2) / 3;
    if (index.size() != expected)
        throw ConstructionFailure("coord_index: covers " + std::to_string(index.size()) +
                                  " of " + std::to_string(expected) + " vertices");
    return cache.emplace(n, std::move(index)).first->second;
}

// True if the edge between canonical coordinates survives (i,j) -> (i+2,j)
// re-indexing at every recursion depth: the two intra-side families are
// integer identities in the offsets, the boundary family stays pinned to
// the top layer, and the three special attachments map onto family edges.
bool embedding_stable_edge(int n, const UCoord& a, const UCoord& b) {
    int m6 = n % 6;
    if (a.bar != b.bar) {
        int imax = u_layer_max(n);
        return a.i == imax && b.i == imax && a.j == b.j && a.j % 2 == 1;
    }
    bool a_special = u_special(n, a.i, a.j);
    bool b_special = u_special(n, b.i, b.j);
    if (a_special || b_special) {
        auto match = [&](int ji, int jj) {
            return (a.j == ji && b.i == 0 && b.j == jj) ||
                   (b.j == ji && a.i == 0 && a.j == jj);
        };
        if (a.i != 0 || b.i != 0) return false;
        if (m6 == 1) return match(5, 4);
        return match(7, 6) || match(6, 4);
    }
    if (a.i == b.i) return std::abs(a.j - b.j) == 1;
    const UCoord& lo = a.i < b.i ? a : b;
    const UCoord& hi = a.i < b.i ? b : a;
    return hi.i == lo.i + 1 && hi.j == lo.j + 3 && lo.j % 2 == 1;
}

struct BaseWalkSearch {
    const HoneycombGraph& graph;
    std::vector<std::vector<int>> allowed;
    int z1, z2;
    int total;
    std::uint64_t nodes = 0;
    std::uint64_t node_cap;
    int extra_budget = 0;
    std::vector<char> visited;
    int visited_count = 0;
    std::set<std::pair<int, int>> tree;
    std::vector<int> walk;

    BaseWalkSearch(const HoneycombGraph& g, std::vector<std::vector<int>> allow,
                   int start, int end, std::uint64_t cap)
        : graph(g), allowed(std::move(allow)), z1(start), z2(end),
          total(static_cast<int>(g.verts.size())), node_cap(cap),
          visited(g.verts.size(), 0) {}

    bool reachable_ok() const {
        // every unvisited vertex must be reachable from the visited region
        std::vector<char> mark(total, 0);
        std::vector<int> stack;
        for (int i = 0; i < total; ++i)
            if (visited[i]) stack.push_back(i);
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : allowed[u]) {
                if (!visited[w] && !mark[w]) {
                    mark[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == total - visited_count;
    }

    bool dfs(int cur, int extra_left) {
        if (visited_count == total) return cur == z2;
        if (++nodes > node_cap) throw SearchExhausted("base_walk: node budget exceeded");
        if (!reachable_ok()) return false;
        for (int nb : allowed[cur]) {
            if (!visited[nb]) {
                if (nb == z2 && visited_count + 1 < total) continue;
                visited[nb] = 1;
                ++visited_count;
                auto e = std::minmax(cur, nb);
                tree.insert(e);
                walk.push_back(nb);
                if (dfs(nb, extra_left)) return true;
                walk.pop_back();
                tree.erase(e);
                --visited_count;
                visited[nb] = 0;
            }
        }
        if (extra_left > 0) {
            for (int nb : allowed[cur]) {
                if (!visited[nb] || nb == z1 || nb == z2) continue;
                if (!tree.count(std::minmax(cur, nb))) continue;
                walk.push_back(nb);
                if (dfs(nb, extra_left - 1)) return true;
                walk.pop_back();
            }
        }
        return false;
    }
};

HamWalk search_base_walk(int n) {
    HoneycombGraph graph = step1a_graph(n, {0, 1});
    auto [zfirst, zlast] = z_endpoints(n, 0, 1);
    int z1 = graph.index_of(zfirst);
    int z2 = graph.index_of(zlast);
    if (z1 < 0 || z2 < 0)
        throw ConstructionFailure("base_walk: endpoint is not a vertex");

    std::vector<std::vector<int>> allowed = graph.adj;
    if (n >= 11) {
        const auto& coords = coord_index(n);
        for (int i = 0; i < static_cast<int>(graph.verts.size()); ++i) {
            std::vector<int> keep;
            for (int j : allowed[i])
                if (embedding_stable_edge(n, coords.at(graph.verts[i].r),
                                          coords.at(graph.verts[j].r)))
                    keep.push_back(j);
            allowed[i] = std::move(keep);
        }
    }

    for (int extra = 0; extra <= 10; ++extra) {
        BaseWalkSearch search(graph, allowed, z1, z2, 20'000'000);
        search.visited[z1] = 1;
        search.visited_count = 1;
        search.walk.push_back(z1);
        bool found = false;
        try {
            found = search.dfs(z1, extra);
        } catch (const SearchExhausted&) {
            continue;
        }
        if (found) {
            HamWalk walk;
            walk.n = n;
            for (int idx : search.walk) walk.seq.push_back(graph.verts[idx]);
            return walk;
        }
    }
    throw SearchExhausted("base_walk: no walk found for n=" + std::to_string(n));
}

HamWalk translate_walk(const HamWalk& walk, int delta) {
    HamWalk out;
    out.n = walk.n;
    out.seq.reserve(walk.seq.size());
    for (const ResidueTriple& t : walk.seq)
        out.seq.push_back(make_residue_triple(walk.n, t.r[0] + delta,
                                              t.r[1] + delta, t.r[2] + delta));
    return out;
}

} // namespace

// ===========================================================================
// pair walks
// ===========================================================================

namespace {

// Explicit traversal segments for the g=1 pair walk, raw coordinates (layers
// above u_layer_max wrap onto barred vertices mod n). The walk is composed
// from Z2 to Z1 and reversed at the end; W' marks the embedded recursive
// walk.
struct RawSeg {
    std::vector<UCoord> coords;
};

HamWalk build_pair_walk_1(int n);

void append_checked(HamWalk& walk, const ResidueTriple& t) {
    if (!walk.seq.empty() && triple_intersection(walk.seq.back(), t) != 2)
        throw ConstructionFailure("pair_walk: junction " + triple_str(walk.seq.back()) +
                                  " -> " + triple_str(t) + " is not an edge");
    walk.seq.push_back(t);
}

// The recursive walk of H^{n-6}, re-indexed through (i,j) -> (i+2,j) with
// the special vertices mapped to (1,1) / (1,2), traversed from its Z2 end
// to its Z1 end.
void append_embedded(HamWalk& walk, int n) {
    int m = n - 6;
    HamWalk sub = build_pair_walk_1(m);
    const auto& coords = coord_index(m);
    for (auto it = sub.seq.rbegin(); it != sub.seq.rend(); ++it) {
        UCoord c = coords.at(it->r);
        UCoord image;
        if (u_special(m, c.i, c.j)) {
            if (m % 6 == 1)
                image = UCoord{1, 1, c.bar};
            else
                image = UCoord{1, c.j == 6 ? 1 : 2, c.bar};
        } else {
            image = UCoord{c.i + 2, c.j, c.bar};
        }
        append_checked(walk, u_eval_raw(n, 1, image));
    }
}

HamWalk build_pair_walk_1(int n) {
    static std::mutex mu;
    static std::map<int, HamWalk> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    HamWalk walk;
    walk.n = n;
    if (n <= 13) {
        walk = search_base_walk(n);
    } else {
        auto U = [](int i, int j) { return UCoord{i, j, false}; };
        auto V = [](int i, int j) { return UCoord{i, j, true}; };
        std::vector<UCoord> head;  // traversal from Z2
        std::vector<UCoord> tail;  // traversal after the embedded walk
        int imax = u_layer_max(n);
        if (n % 6 == 1) {
            head = {U(0, 5), U(0, 4), U(0, 3), U(0, 2), U(0, 1), U(0, 2)};
            for (int k = 1; k <= imax; ++k) {
                head.push_back(U(2 * k - 2, 6 * k - 3));
                head.push_back(U(2 * k - 1, 6 * k));
                head.push_back(U(2 * k - 1, 6 * k + 1));
                head.push_back(U(2 * k, 6 * k + 4));
            }
            head.push_back(V(1, 6));
            head.push_back(V(1, 5));
            for (int k = 2 * imax - 1; k >= 1; --k) {
                if (k % 2 == 1)
                    for (int j = 3 * k + 2; j >= 3 * k - 1; --j) head.push_back(U(k, j));
                else
                    for (int j = 3 * k - 1; j <= 3 * k + 2; ++j) head.push_back(U(k, j));
            }
            tail = {V(1, 2), V(1, 3), V(1, 4), V(0, 1),
                    V(0, 2), V(0, 3), V(0, 4), V(0, 5)};
        } else {
            head = {U(0, 7), U(0, 6), U(0, 4), U(0, 5), U(1, 8), U(0, 5), U(0, 4),
                    U(0, 3), U(0, 2), U(0, 1), U(1, 4), U(1, 5), U(1, 6)};
            for (int k = 1; k <= imax - 1; ++k) {
                head.push_back(U(2 * k - 1, 6 * k + 1));
                head.push_back(U(2 * k, 6 * k + 4));
                head.push_back(U(2 * k, 6 * k + 5));
                head.push_back(U(2 * k + 1, 6 * k + 8));
            }
            head.push_back(V(2, 10));
            head.push_back(V(2, 9));
            for (int k = 2 * imax - 2; k >= 2; --k) {
                if (k % 2 == 0)
                    for (int j = 3 * k + 3; j >= 3 * k; --j) head.push_back(U(k, j));
                else
                    for (int j = 3 * k; j <= 3 * k + 3; ++j) head.push_back(U(k, j));
            }
            head.push_back(U(1, 3));
            tail = {V(1, 3), V(2, 6), V(2, 7), V(2, 8), V(1, 5), V(1, 4),
                    V(0, 1), V(0, 2), V(0, 3), V(1, 6), V(1, 7), V(1, 8),
                    V(0, 5), V(0, 4), V(0, 6), V(0, 7)};
        }
        for (const UCoord& c : head) append_checked(walk, u_eval_raw(n, 1, c));
        append_embedded(walk, n);
        for (const UCoord& c : tail) append_checked(walk, u_eval_raw(n, 1, c));
        std::reverse(walk.seq.begin(), walk.seq.end());
    }

    HoneycombGraph graph = step1a_graph(n, {0, 1});
    auto [z1, z2] = z_endpoints(n, 0, 1);
    require_spanning_tree_walk(graph, walk, z1, z2, 3);

    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(walk)).first->second;
}

} // namespace

HamWalk base_walk(int n, int g) {
    if (n != 5 && n != 7 && n != 11 && n != 13)
        throw InvalidParams("base_walk: only n in {5,7,11,13}");
    require_valid_n(n);
    return translate_walk(build_pair_walk_1(n), imod(g - 1, n));
}

HamWalk pair_walk(int n, int g) {
    require_valid_n(n);
    if (g < 0 || g >= n) throw InvalidParams("pair_walk: class out of range");
    return translate_walk(build_pair_walk_1(n), imod(g - 1, n));
}

HamWalk extend_triple_walk(int n, int g) {
    require_valid_n(n);
    HamWalk walk = pair_walk(n, g);
    const ResidueTriple z = walk.seq.front();
    int g_up = imod(g + 1, n);

    for (const auto& base : class_bases(n, g_up)) {
        ResidueTriple pendant = make_residue_triple(n, base[0], base[1], base[2]);
        ResidueTriple attach;
        bool found = false;
        for (int e = 0; e < 3 && !found; ++e) {
            int other1 = pendant.r[(e + 1) % 3];
            int other2 = pendant.r[(e + 2) % 3];
            int down = imod(pendant.r[e] - 3, n);
            if (down == other1 || down == other2) continue;
            ResidueTriple cand = make_residue_triple(n, down, other1, other2);
            if (cand == z) continue;
            attach = cand;
            found = true;
        }
        if (!found)
            throw ConstructionFailure("extend_triple_walk: no attachment for " +
                                      triple_str(pendant));
        auto pos = std::find(walk.seq.begin(), walk.seq.end(), attach);
        if (pos == walk.seq.end())
            throw ConstructionFailure("extend_triple_walk: attachment " +
                                      triple_str(attach) + " not in walk");
        // detour attach -> pendant -> attach
        pos = walk.seq.insert(pos + 1, attach);
        walk.seq.insert(pos, pendant);
    }
    return walk;
}

HamWalk multi_walk(int n, int t) {
    require_valid_lambda(n, 2 * t);
    HamWalk walk;
    walk.n = n;

    std::vector<HamWalk> segments;
    int pairs_end = t % 2 == 0 ? t - 1 : t - 4;
    for (int g = 1; g <= pairs_end; g += 2) segments.push_back(pair_walk(n, g));
    if (t % 2 == 1) segments.push_back(extend_triple_walk(n, t - 2));

    for (const HamWalk& seg : segments) {
        if (!walk.seq.empty() &&
            triple_intersection(walk.seq.back(), seg.seq.front()) != 2)
            throw ConstructionFailure("multi_walk: segment junction " +
                                      triple_str(walk.seq.back()) + " -> " +
                                      triple_str(seg.seq.front()) + " is not an edge");
        walk.seq.insert(walk.seq.end(), seg.seq.begin(), seg.seq.end());
    }

    std::vector<int> classes(t);
    for (int g = 0; g < t; ++g) classes[g] = g;
    HoneycombGraph graph = step1a_graph(n, classes);
    ResidueTriple z = z_endpoints(n, 0, 1).first;
    ResidueTriple y = t % 2 == 0 ? z_endpoints(n, t - 2, t - 1).second
                                 : z_endpoints(n, t - 3, t - 2).second;
    require_spanning_tree_walk(graph, walk, z, y, 6);
    return walk;
}

SpanningTree walk_to_tree(int n, int t, const HamWalk& walk) {
    ResidueTriple z = z_endpoints(n, 0, 1).first;
    if (walk.seq.size() < 2 || !(walk.seq.front() == z))
        throw ConstructionFailure("walk_to_tree: walk does not start at Z");
    if (std::count(walk.seq.begin(), walk.seq.end(), z) != 1)
        throw ConstructionFailure("walk_to_tree: Z appears more than once");

    SpanningTree tree;
    tree.n = n;
    tree.t = t;
    tree.verts.assign(walk.seq.begin() + 1, walk.seq.end());
    std::sort(tree.verts.begin(), tree.verts.end());
    tree.verts.erase(std::unique(tree.verts.begin(), tree.verts.end()),
                     tree.verts.end());

    auto index_of = [&](const ResidueTriple& v) {
        auto it = std::lower_bound(tree.verts.begin(), tree.verts.end(), v);
        assert(it != tree.verts.end() && *it == v);
        return static_cast<int>(it - tree.verts.begin());
    };

    int m = static_cast<int>(tree.verts.size());
    std::set<std::pair<int, int>> edges;
    UnionFind uf(m);
    for (std::size_t s = 2; s < walk.seq.size(); ++s) {
        int a = index_of(walk.seq[s - 1]);
        int b = index_of(walk.seq[s]);
        if (edges.insert(std::minmax(a, b)).second && !uf.join(a, b))
            throw ConstructionFailure("walk_to_tree: cycle in trimmed walk");
    }
    if (static_cast<int>(edges.size()) != m - 1)
        throw ConstructionFailure("walk_to_tree: not a tree after dropping Z");

    tree.adj.assign(m, {});
    for (const auto& [a, b] : edges) {
        tree.adj[a].push_back(b);
        tree.adj[b].push_back(a);
    }
    for (const auto& lst : tree.adj)
        if (lst.size() > 6)
            throw ConstructionFailure("walk_to_tree: degree bound 6 exceeded");
    return tree;
}

} // namespace tsgen
