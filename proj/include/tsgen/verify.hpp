#pragma once

// Independent verification. Nothing here calls the construction: the design
// checker recounts pair coverage from the raw block list, and the Gray-code
// checker re-derives every intersection. A small exhaustive Hamilton-path
// oracle backs the property tests for the path builders.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsgen/core.hpp"

namespace tsgen {

struct VerificationReport {
    bool ok = true;
    std::vector<std::string> failures;  // empty iff ok
    long long block_count = 0;

    void fail(std::string msg) {
        ok = false;
        if (failures.size() < 32) failures.push_back(std::move(msg));
    }
};

// Checks that `blocks` is a simple TS(2n+2, lambda): valid sorted triples of
// distinct in-range points, no duplicate blocks, every unordered point pair
// covered exactly lambda times, and the implied block count.
VerificationReport verify_design(int n, int lambda,
                                 const std::vector<Block>& blocks);

// Checks that `order` is a permutation of the block indices and that
// consecutive blocks (cyclically) share exactly two points.
VerificationReport verify_gray_code(const std::vector<Block>& blocks,
                                    const std::vector<std::size_t>& order);

// Exhaustive Hamilton path search on a graph given by adjacency lists
// (at most 50 vertices). `start` / `end` of -1 mean unconstrained. Returns
// the path as vertex indices, or nullopt if none exists. Deterministic:
// candidates are explored in ascending order. Throws Timeout once more than
// `node_budget` search nodes have been expanded.
std::optional<std::vector<int>> oracle_ham_path(
    const std::vector<std::vector<int>>& adj, int start = -1, int end = -1,
    std::uint64_t node_budget = 50'000'000);

} // namespace tsgen
