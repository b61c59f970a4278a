#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domset/cluster_forest.hpp"
#include "domset/graph.hpp"
#include "domset/greedy.hpp"
#include "domset/purify_state.hpp"

namespace domset {

enum class Procedure { kPP0 = 0, kPP1 = 1, kPP2 = 2, kPP3 = 3, kPP4 = 4 };

inline constexpr std::array<Procedure, 5> kAllProcedures = {
    Procedure::kPP0, Procedure::kPP1, Procedure::kPP2, Procedure::kPP3, Procedure::kPP4};

const char* to_string(Procedure p) noexcept;
std::optional<Procedure> parse_procedure(std::string_view name);

struct PurifyOptions {
    double alpha = 1.0;
    double beta = 1.0;
    /// Finish with a reverse-insertion-order redundancy sweep (PP0-PP3 only).
    bool tighten = false;
    /// Validate the firm/pending/unconsidered partition after every iteration.
    bool check_invariants = false;
};

enum class EventKind { kFirm, kPending, kPurify, kRepair, kTighten };

const char* to_string(EventKind k) noexcept;

struct PurifyEvent {
    std::size_t iteration = 0;
    EventKind kind = EventKind::kFirm;
    Vertex vertex = kNoVertex;
};

struct PurifyResult {
    Procedure procedure = Procedure::kPP4;
    VertexSet final_set;
    std::size_t purified_count = 0;
    std::size_t repair_additions = 0;
    /// True when the firm set already dominated before any traversal.
    bool early_exit = false;
    std::vector<PurifyEvent> log;
};

// Each procedure returns a dominating subset of the Stage-1 set.
// Throws std::invalid_argument if alpha/beta lie outside [0, 1] or the forest
// does not cover exactly the vertices of the set.

/// Baseline: quadruple/trio rule along leaf-to-root paths of each cluster.
PurifyResult purify_pp0(const Graph& g, const OrderedDominatingSet& s, const ClusterForest& forest,
                        const PurifyOptions& options = {});

/// Bottom-up level traversal with firm/child rules.
PurifyResult purify_pp1(const Graph& g, const OrderedDominatingSet& s, const ClusterForest& forest,
                        const PurifyOptions& options = {});

/// Repeatedly firms the maximum-balance vertex of each cluster.
PurifyResult purify_pp2(const Graph& g, const OrderedDominatingSet& s, const ClusterForest& forest,
                        const PurifyOptions& options = {});

/// Repeatedly purifies the minimum-balance vertex of each cluster and firms
/// every vertex that gains a semi-private neighbor.
PurifyResult purify_pp3(const Graph& g, const OrderedDominatingSet& s, const ClusterForest& forest,
                        const PurifyOptions& options = {});

/// Reverse insertion-order scan removing every vertex whose closed
/// neighborhood stays covered. The result is 1-minimal.
PurifyResult purify_pp4(const Graph& g, const OrderedDominatingSet& s);

PurifyResult run_procedure(Procedure p, const Graph& g, const Stage1Result& stage1,
                           const PurifyOptions& options = {});

/// Re-adds purified vertices, most recent first, while some vertex is
/// uncovered; a candidate is re-added only if it covers an uncovered vertex.
/// `added` (optional) receives the re-added vertices in order.
/// Throws std::logic_error if the result still does not dominate.
VertexSet repair_domination(const Graph& g, const VertexSet& reduced,
                            std::span<const Vertex> purified,
                            std::vector<Vertex>* added = nullptr);

/// Removes, in the given order, each member whose closed neighborhood is
/// covered by the remaining members. Order entries not in `set` are ignored.
VertexSet remove_redundant(const Graph& g, VertexSet set, std::span<const Vertex> order,
                           std::vector<Vertex>* removed = nullptr);

/// True iff dominating and no single member can be dropped.
bool is_minimal_dominating(const Graph& g, const VertexSet& s);

/// JSON object: procedure, alpha, beta, events, final set as sorted labels.
std::string purify_log_json(const Graph& g, const PurifyResult& result, const PurifyOptions& options);

} // namespace domset
