#include "tsgen/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tsgen {

VerificationReport verify_design(int n, int lambda,
                                 const std::vector<Block>& blocks) {
    VerificationReport report;
    report.block_count = static_cast<long long>(blocks.size());
    if (n < 1) {
        report.fail("n must be positive");
        return report;
    }
    int v = 2 * n + 2;

    std::set<Block> seen;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        if (!(b[0] < b[1] && b[1] < b[2])) {
            report.fail("block " + std::to_string(i) + " is not a sorted triple of distinct points");
            continue;
        }
        if (b[2] >= static_cast<Point>(v)) {
            report.fail("block " + std::to_string(i) + " contains an out-of-range point");
            continue;
        }
        if (!seen.insert(b).second)
            report.fail("duplicate block at index " + std::to_string(i));
    }
    if (!report.ok) return report;

    long long expected = static_cast<long long>(lambda) * v * (v - 1) / 6;
    if (report.block_count != expected)
        report.fail("block count " + std::to_string(report.block_count) +
                    " differs from lambda*v*(v-1)/6 = " + std::to_string(expected));

    // Pair coverage, counted from scratch.
    std::vector<int> pair_count(static_cast<std::size_t>(v) * v, 0);
    for (const Block& b : blocks) {
        pair_count[b[0] * v + b[1]]++;
        pair_count[b[0] * v + b[2]]++;
        pair_count[b[1] * v + b[2]]++;
    }
    for (int p = 0; p < v; ++p) {
        for (int q = p + 1; q < v; ++q) {
            int c = pair_count[p * v + q];
            if (c != lambda)
                report.fail("pair {" + point_name(static_cast<Point>(p)) + ", " +
                            point_name(static_cast<Point>(q)) + "} covered " +
                            std::to_string(c) + " times, expected " +
                            std::to_string(lambda));
        }
    }
    return report;
}

VerificationReport verify_gray_code(const std::vector<Block>& blocks,
                                    const std::vector<std::size_t>& order) {
    VerificationReport report;
    report.block_count = static_cast<long long>(blocks.size());
    if (order.size() != blocks.size()) {
        report.fail("order length " + std::to_string(order.size()) +
                    " differs from block count " + std::to_string(blocks.size()));
        return report;
    }
    if (blocks.empty()) {
        report.fail("empty block list");
        return report;
    }
    std::vector<char> used(blocks.size(), 0);
    for (std::size_t idx : order) {
        if (idx >= blocks.size()) {
            report.fail("order contains out-of-range index " + std::to_string(idx));
            return report;
        }
        if (used[idx]) {
            report.fail("order visits block " + std::to_string(idx) + " twice");
            return report;
        }
        used[idx] = 1;
    }

    auto shared = [&](const Block& a, const Block& b) {
        int count = 0;
        for (Point p : a)
            if (p == b[0] || p == b[1] || p == b[2]) ++count;
        return count;
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t a = order[i];
        std::size_t b = order[(i + 1) % order.size()];
        int s = shared(blocks[a], blocks[b]);
        if (s != 2)
            report.fail("consecutive blocks at position " + std::to_string(i) +
                        " share " + std::to_string(s) + " points, expected 2");
    }
    return report;
}

namespace {

struct HamSearch {
    const std::vector<std::vector<int>>& adj;
    int n;
    int end;
    std::uint64_t budget;
    std::uint64_t expanded = 0;
    std::vector<char> visited;
    std::vector<int> path;

    HamSearch(const std::vector<std::vector<int>>& a, int end_,
              std::uint64_t budget_)
        : adj(a), n(static_cast<int>(a.size())), end(end_), budget(budget_),
          visited(a.size(), 0) {}

    // All unvisited vertices must remain reachable from `from` through
    // unvisited vertices, otherwise this branch is dead.
    bool connected_enough(int from) const {
        std::vector<char> mark(n, 0);
        std::vector<int> stack{from};
        mark[from] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u]) {
                if (!mark[w] && !visited[w]) {
                    mark[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        int unvisited = n - static_cast<int>(path.size());
        return reached >= unvisited;
    }

    bool dfs(int u) {
        if (++expanded > budget) throw Timeout("oracle_ham_path: node budget exceeded");
        visited[u] = 1;
        path.push_back(u);
        if (static_cast<int>(path.size()) == n) {
            if (end < 0 || u == end) return true;
        } else if (connected_enough(u)) {
            for (int w : adj[u]) {
                if (visited[w]) continue;
                // Never park on the required end early.
                if (w == end && static_cast<int>(path.size()) + 1 < n) continue;
                if (dfs(w)) return true;
            }
        }
        visited[u] = 0;
        path.pop_back();
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> oracle_ham_path(
    const std::vector<std::vector<int>>& adj, int start, int end,
    std::uint64_t node_budget) {
    int n = static_cast<int>(adj.size());
    if (n == 0 || n > 50)
        throw InvalidParams("oracle_ham_path: vertex count must be in [1, 50]");
    if (start >= n || end >= n)
        throw InvalidEndpoint("oracle_ham_path: endpoint out of range");
    for (int i = 0; i < n; ++i)
        for (int w : adj[i])
            if (w < 0 || w >= n)
                throw InvalidParams("oracle_ham_path: bad adjacency entry");

    HamSearch search(adj, end, node_budget);
    if (start >= 0) {
        if (search.dfs(start)) return search.path;
        return std::nullopt;
    }
    for (int s = 0; s < n; ++s) {
        if (search.dfs(s)) return search.path;
    }
    return std::nullopt;
}

} // namespace tsgen
