#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "domset/cluster_forest.hpp"
#include "domset/graph.hpp"

namespace domset {

/// Dominating set together with the order in which vertices were added.
struct OrderedDominatingSet {
    std::vector<Vertex> order;
    VertexSet members;

    std::size_t size() const noexcept { return order.size(); }
};

struct GreedyStep {
    Vertex vertex = kNoVertex;
    std::size_t active_degree = 0;
    std::size_t forest_neighbors = 0;
    ClusterCase cluster_case = ClusterCase::kNewCluster;
    std::vector<Edge> deleted_edges;
};

using GreedyTrace = std::vector<GreedyStep>;

struct Stage1Result {
    OrderedDominatingSet set;
    ClusterForest forest;
    GreedyTrace trace;
};

/// |N(v) \ covered|, where covered = S ∪ N(S) for the current partial set S.
std::size_t active_degree(const Graph& g, const VertexSet& covered, Vertex v);

/// Greedy construction with cluster bookkeeping.
///
/// Each step adds the vertex outside S with maximum active degree, ties to the
/// lowest id. Once every remaining active degree is zero, the lowest-id
/// uncovered vertex is taken, one per step, until S dominates. Each added
/// vertex is inserted into the cluster forest.
Stage1Result greedy_dominating_set(const Graph& g);

/// One JSON object per line, one line per step, vertices as labels.
std::string trace_to_json_lines(const Graph& g, const GreedyTrace& trace);

} // namespace domset
