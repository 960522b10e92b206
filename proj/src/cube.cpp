#include "tsgen/cube.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>

namespace tsgen {

namespace {

bool cube_dfs(int cur, int end, unsigned visited, std::vector<int>& path) {
    if (path.size() == 8) return cur == end;
    for (int k = 0; k < 3; ++k) {
        int next = cur ^ (1 << k);
        if (visited & (1u << next)) continue;
        if (next == end && path.size() + 1 < 8) continue;
        path.push_back(next);
        if (cube_dfs(next, end, visited | (1u << next), path)) return true;
        path.pop_back();
    }
    return false;
}

} // namespace

std::vector<int> cube_ham_path(int a, int b) {
    if (a < 0 || a > 7 || b < 0 || b > 7)
        throw InvalidParams("cube_ham_path: codes must be 3-bit");
    if (std::popcount(static_cast<unsigned>(a ^ b)) % 2 == 0)
        throw NoPath("cube_ham_path: endpoints differ in an even number of bits");
    std::vector<int> path{a};
    bool found = cube_dfs(a, b, 1u << a, path);
    assert(found);  // parity permits, and Q3 is Hamilton-laceable
    (void)found;
    return path;
}

TreeCycle tree_cube_cycle(const SpanningTree& tree) {
    int m = static_cast<int>(tree.verts.size());
    if (m == 0) throw InvalidParams("tree_cube_cycle: empty tree");
    for (const auto& lst : tree.adj)
        if (lst.size() > 6)
            throw InvalidParams("tree_cube_cycle: degree bound 6 exceeded");

    // Peel smallest-index leaves, recording (leaf, parent).
    std::vector<int> degree(m);
    std::vector<char> removed(m, 0);
    for (int i = 0; i < m; ++i) degree[i] = static_cast<int>(tree.adj[i].size());
    std::vector<std::pair<int, int>> peel;  // (leaf, parent)
    for (int round = 0; round < m - 1; ++round) {
        int leaf = -1;
        for (int i = 0; i < m && leaf < 0; ++i)
            if (!removed[i] && degree[i] == 1) leaf = i;
        if (leaf < 0) throw InvalidParams("tree_cube_cycle: not a tree");
        int parent = -1;
        for (int w : tree.adj[leaf])
            if (!removed[w]) parent = w;
        assert(parent >= 0);
        removed[leaf] = 1;
        --degree[parent];
        peel.emplace_back(leaf, parent);
    }
    int root = -1;
    for (int i = 0; i < m; ++i)
        if (!removed[i]) root = i;
    assert(root >= 0);

    // Root fiber: the standard 8-cycle gray code.
    TreeCycle cycle;
    cycle.root = root;
    for (int code : {0, 1, 3, 2, 6, 7, 5, 4}) cycle.seq.emplace_back(root, code);

    // Re-attach in reverse peel order: splice each child's fiber across the
    // first surviving cube edge of its parent.
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        auto [child, parent] = *it;
        int len = static_cast<int>(cycle.seq.size());
        int at = -1;
        for (int i = 0; i < len; ++i) {
            if (cycle.seq[i].first == parent &&
                cycle.seq[(i + 1) % len].first == parent) {
                at = i;
                break;
            }
        }
        if (at < 0)
            throw ConstructionFailure("tree_cube_cycle: parent fiber has no free cube edge");
        std::vector<int> path =
            cube_ham_path(cycle.seq[at].second, cycle.seq[(at + 1) % len].second);
        std::vector<std::pair<int, int>> fiber;
        fiber.reserve(8);
        for (int code : path) fiber.emplace_back(child, code);
        cycle.seq.insert(cycle.seq.begin() + at + 1, fiber.begin(), fiber.end());
    }

    // Structural validation of the closed tour.
    if (cycle.seq.size() != static_cast<std::size_t>(m) * 8)
        throw ConstructionFailure("tree_cube_cycle: wrong length");
    std::set<std::pair<int, int>> distinct(cycle.seq.begin(), cycle.seq.end());
    if (distinct.size() != cycle.seq.size())
        throw ConstructionFailure("tree_cube_cycle: repeated pair");
    std::set<std::pair<int, int>> tree_edges;
    for (int a = 0; a < m; ++a)
        for (int b : tree.adj[a]) tree_edges.insert(std::minmax(a, b));
    int len = static_cast<int>(cycle.seq.size());
    for (int i = 0; i < len; ++i) {
        auto [va, ca] = cycle.seq[i];
        auto [vb, cb] = cycle.seq[(i + 1) % len];
        bool cube_step = va == vb &&
                         std::popcount(static_cast<unsigned>(ca ^ cb)) == 1;
        bool tree_step = ca == cb && tree_edges.count(std::minmax(va, vb)) > 0;
        if (!cube_step && !tree_step)
            throw ConstructionFailure("tree_cube_cycle: invalid step");
    }
    return cycle;
}

} // namespace tsgen
