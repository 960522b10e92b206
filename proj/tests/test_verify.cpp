// Tests for the independent design/Gray-code verifier and the exhaustive
// Hamilton-path oracle. The oracle is cross-checked on the Petersen graph,
// whose Hamilton-path structure is fully known: paths exist exactly between
// non-adjacent vertex pairs (and freely), never between adjacent ones.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tsgen/assemble.hpp"
#include "tsgen/core.hpp"
#include "tsgen/errors.hpp"
#include "tsgen/verify.hpp"

#include <algorithm>
#include <set>

using namespace tsgen;

namespace {

std::vector<std::vector<int>> petersen() {
    std::vector<std::set<int>> adj(10);
    auto add = [&](int a, int b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for (int i = 0; i < 5; ++i) {
        add(i, (i + 1) % 5);        // outer cycle
        add(i, i + 5);              // spoke
        add(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    std::vector<std::vector<int>> out(10);
    for (int i = 0; i < 10; ++i) out[i].assign(adj[i].begin(), adj[i].end());
    return out;
}

void check_path(const std::vector<std::vector<int>>& adj, const std::vector<int>& p) {
    REQUIRE(p.size() == adj.size());
    std::set<int> seen(p.begin(), p.end());
    CHECK(seen.size() == p.size());
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const auto& nb = adj[p[i]];
        CHECK(std::find(nb.begin(), nb.end(), p[i + 1]) != nb.end());
    }
}

}  // namespace

TEST_CASE("verify_design accepts the construction output") {
    for (auto [n, lam] : {std::pair{5, 4}, {5, 10}, {7, 6}, {11, 4}}) {
        auto ts = union_design(n, lam, default_coloring(n));
        auto rep = verify_design(n, lam, ts.blocks);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
        CHECK(rep.block_count == static_cast<long long>(ts.blocks.size()));
    }
}

TEST_CASE("verify_design catches corruption") {
    auto ts = union_design(5, 4, default_coloring(5));

    SUBCASE("dropped block") {
        auto bad = ts.blocks;
        bad.pop_back();
        auto rep = verify_design(5, 4, bad);
        CHECK(!rep.ok);
        CHECK(!rep.failures.empty());
    }
    SUBCASE("duplicated block") {
        auto bad = ts.blocks;
        bad[10] = bad[11];
        auto rep = verify_design(5, 4, bad);
        CHECK(!rep.ok);
    }
    SUBCASE("mutated point skews pair coverage") {
        auto bad = ts.blocks;
        // swap one point for another not in the block
        Block& b = bad[20];
        for (Point cand = 0;; ++cand)
            if (!block_contains(b, cand)) {
                b = make_block(b[0], b[1], cand);
                break;
            }
        auto rep = verify_design(5, 4, bad);
        CHECK(!rep.ok);
    }
    SUBCASE("out-of-range point") {
        auto bad = ts.blocks;
        bad[0] = Block{2, 3, static_cast<Point>(200)};
        CHECK(!verify_design(5, 4, bad).ok);
    }
    SUBCASE("unsorted block") {
        auto bad = ts.blocks;
        std::swap(bad[0][0], bad[0][2]);
        CHECK(!verify_design(5, 4, bad).ok);
    }
    SUBCASE("wrong lambda claim") {
        CHECK(!verify_design(5, 6, ts.blocks).ok);
    }
}

TEST_CASE("verify_gray_code accepts the assembled order") {
    auto a = assemble(5, 4, default_coloring(5));
    CHECK(verify_gray_code(a.design.blocks, a.order).ok);

    // cyclic validity is rotation invariant
    auto rot = a.order;
    std::rotate(rot.begin(), rot.begin() + 17, rot.end());
    CHECK(verify_gray_code(a.design.blocks, rot).ok);
    auto rev = a.order;
    std::reverse(rev.begin(), rev.end());
    CHECK(verify_gray_code(a.design.blocks, rev).ok);
}

TEST_CASE("verify_gray_code catches bad orders") {
    auto a = assemble(5, 4, default_coloring(5));

    SUBCASE("swap breaks an adjacency") {
        auto bad = a.order;
        std::swap(bad[3], bad[40]);
        CHECK(!verify_gray_code(a.design.blocks, bad).ok);
    }
    SUBCASE("wrong length") {
        auto bad = a.order;
        bad.pop_back();
        CHECK(!verify_gray_code(a.design.blocks, bad).ok);
    }
    SUBCASE("repeated index") {
        auto bad = a.order;
        bad[1] = bad[0];
        CHECK(!verify_gray_code(a.design.blocks, bad).ok);
    }
    SUBCASE("index out of range") {
        auto bad = a.order;
        bad[5] = a.design.blocks.size();
        CHECK(!verify_gray_code(a.design.blocks, bad).ok);
    }
    SUBCASE("canonical order is not a Gray code") {
        std::vector<std::size_t> ident(a.design.blocks.size());
        for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
        CHECK(!verify_gray_code(a.design.blocks, ident).ok);
    }
}

TEST_CASE("oracle on the Petersen graph") {
    auto g = petersen();

    // free Hamilton path exists
    auto free_path = oracle_ham_path(g);
    REQUIRE(free_path.has_value());
    check_path(g, *free_path);

    // no Hamilton path between adjacent endpoints (else a Hamilton cycle)
    CHECK(!oracle_ham_path(g, 0, 1).has_value());
    CHECK(!oracle_ham_path(g, 0, 5).has_value());
    CHECK(!oracle_ham_path(g, 5, 7).has_value());

    // Hamilton path between any non-adjacent pair
    auto p07 = oracle_ham_path(g, 0, 7);
    REQUIRE(p07.has_value());
    check_path(g, *p07);
    CHECK(p07->front() == 0);
    CHECK(p07->back() == 7);
    auto p02 = oracle_ham_path(g, 0, 2);
    REQUIRE(p02.has_value());
    check_path(g, *p02);

    // deterministic
    CHECK(*oracle_ham_path(g, 0, 7) == *p07);
}

TEST_CASE("oracle on small cycles and edge cases") {
    // 6-cycle: path between adjacent endpoints goes the long way round
    std::vector<std::vector<int>> c6(6);
    for (int i = 0; i < 6; ++i) {
        c6[i].push_back((i + 1) % 6);
        c6[i].push_back((i + 5) % 6);
        std::sort(c6[i].begin(), c6[i].end());
    }
    auto p = oracle_ham_path(c6, 0, 1);
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{0, 5, 4, 3, 2, 1});

    // endpoint fixed at one side only
    auto p3 = oracle_ham_path(c6, 3);
    REQUIRE(p3.has_value());
    CHECK(p3->front() == 3);
    check_path(c6, *p3);

    CHECK_THROWS_AS(oracle_ham_path(c6, 17), InvalidEndpoint);
    CHECK_THROWS_AS(oracle_ham_path(c6, -1, 99), InvalidEndpoint);

    std::vector<std::vector<int>> big(51);
    CHECK_THROWS_AS(oracle_ham_path(big), InvalidParams);
}

TEST_CASE("oracle budget exhaustion raises Timeout") {
    // complete bipartite K_{5,7}: no Hamilton path exists (sides differ by
    // 2), and the search space is large enough that a tiny budget trips
    std::vector<std::vector<int>> g(12);
    for (int a = 0; a < 5; ++a)
        for (int b = 5; b < 12; ++b) {
            g[a].push_back(b);
            g[b].push_back(a);
        }
    for (auto& v : g) std::sort(v.begin(), v.end());
    CHECK_THROWS_AS(oracle_ham_path(g, -1, -1, 3), Timeout);
    // with the default budget the exhaustion is conclusive
    CHECK(!oracle_ham_path(g).has_value());
}
