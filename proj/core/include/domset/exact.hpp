#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

#include "domset/graph.hpp"

namespace domset {

struct ExactBudget {
    std::uint64_t max_nodes = 50'000'000;
    std::chrono::milliseconds max_time{10'000};
};

struct ExactResult {
    std::size_t gamma = 0;
    VertexSet witness;
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

inline constexpr std::size_t kExactMaxVertices = 64;

/// Branch and bound for the domination number.
///
/// Branches on the lowest-id uncovered vertex, trying the members of its
/// closed neighborhood in decreasing order of newly covered vertices, and
/// prunes with |chosen| + ceil(uncovered / (Delta + 1)). When the budget runs
/// out the result has timed_out set and gamma holds the best size found so
/// far, which is an upper bound only.
///
/// Throws std::invalid_argument for graphs with more than kExactMaxVertices
/// vertices.
ExactResult exact_gamma(const Graph& g, const ExactBudget& budget = {});

} // namespace domset
