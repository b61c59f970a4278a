#pragma once

#include <cstddef>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

/// Partition of the Stage-1 set during purification.
///
/// firm, pending and unconsidered partition the survivors; survivors and
/// purified partition the original set.
struct PurifyState {
    VertexSet firm;
    VertexSet pending;
    VertexSet unconsidered;
    VertexSet survivors;
    std::vector<Vertex> purified;
    double alpha = 1.0;
    double beta = 1.0;
    std::size_t iteration = 0;

    /// Everything unconsidered, nothing firm or purified.
    static PurifyState initial(const VertexSet& original, double alpha, double beta);

    /// Throws std::logic_error on a broken partition or weight range.
    void validate(const VertexSet& original) const;
};

/// Neighbors of v outside the survivors that no firm vertex is adjacent to.
VertexSet compute_ocs(const Graph& g, const PurifyState& state, Vertex v);

/// Surviving neighbors of v that are not firm.
VertexSet compute_ics(const Graph& g, const PurifyState& state, Vertex v);

/// alpha * |OCS(v)| + beta * |ICS(v)|.
double purification_balance(const Graph& g, const PurifyState& state, Vertex v);

/// PurifyState plus the per-vertex counters that make semi-private,
/// OCS and ICS queries O(deg v):
///   survivor_count[x] = |N(x) ∩ survivors|
///   firm_count[x]     = |N(x) ∩ firm|
class PurifyTracker {
public:
    PurifyTracker(const Graph& g, const VertexSet& original, double alpha, double beta);

    const PurifyState& state() const noexcept { return state_; }
    const Graph& graph() const noexcept { return *graph_; }

    bool is_firm(Vertex v) const noexcept { return state_.firm.contains(v); }
    bool is_survivor(Vertex v) const noexcept { return state_.survivors.contains(v); }
    bool is_pending(Vertex v) const noexcept { return state_.pending.contains(v); }

    /// Moves a survivor into firm. No-op if already firm.
    void make_firm(Vertex v);
    /// Moves a non-firm survivor from unconsidered to pending.
    void make_pending(Vertex v);
    /// Removes a non-firm survivor; appends it to the purified sequence.
    void purify(Vertex v);

    bool has_semi_private_neighbor(Vertex v) const;
    /// The unique surviving neighbor of an outside vertex x with exactly one.
    Vertex sole_survivor_neighbor(Vertex x) const;

    std::size_t ocs_size(Vertex v) const;
    std::size_t ics_size(Vertex v) const;
    double balance(Vertex v) const;

    /// Whether the firm vertices alone dominate the graph (O(1)).
    bool firm_dominates() const noexcept { return firm_uncovered_ == 0; }
    /// Whether the survivors dominate the graph (O(1)).
    bool survivors_dominate() const noexcept { return survivor_uncovered_ == 0; }

    std::size_t survivor_count(Vertex x) const noexcept { return survivor_count_[x]; }

    void next_iteration() noexcept { ++state_.iteration; }

private:
    bool covered_by_survivors(Vertex x) const noexcept {
        return state_.survivors.contains(x) || survivor_count_[x] > 0;
    }
    bool covered_by_firm(Vertex x) const noexcept {
        return state_.firm.contains(x) || firm_count_[x] > 0;
    }

    const Graph* graph_;
    PurifyState state_;
    std::vector<std::size_t> survivor_count_;
    std::vector<std::size_t> firm_count_;
    std::size_t survivor_uncovered_ = 0;
    std::size_t firm_uncovered_ = 0;
};

} // namespace domset
