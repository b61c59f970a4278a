#include "domset/purify_state.hpp"

#include <stdexcept>
#include <string>

namespace domset {

PurifyState PurifyState::initial(const VertexSet& original, double alpha, double beta) {
    const std::size_t n = original.universe();
    PurifyState s{VertexSet(n), VertexSet(n), original, original, {}, alpha, beta, 0};
    return s;
}

void PurifyState::validate(const VertexSet& original) const {
    auto fail = [](const std::string& what) { throw std::logic_error("PurifyState: " + what); };
    if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0)) fail("weights outside [0, 1]");
    const std::size_t n = original.universe();
    if (firm.universe() != n || pending.universe() != n || unconsidered.universe() != n ||
        survivors.universe() != n)
        fail("universe mismatch");

    VertexSet removed(n);
    for (Vertex v : purified) {
        if (!original.contains(v)) fail("purified vertex outside the original set");
        if (!removed.insert(v)) fail("vertex purified twice");
    }
    for (Vertex v = 0; v < n; ++v) {
        const int parts = firm.contains(v) + pending.contains(v) + unconsidered.contains(v);
        if (parts > 1) fail("firm/pending/unconsidered overlap at " + std::to_string(v));
        if (survivors.contains(v) != (parts == 1)) fail("survivors != firm ∪ pending ∪ unconsidered");
        if (survivors.contains(v) && removed.contains(v)) fail("purified vertex still survives");
        if (original.contains(v) != (survivors.contains(v) || removed.contains(v)))
            fail("partition does not cover the original set");
    }
}

VertexSet compute_ocs(const Graph& g, const PurifyState& state, Vertex v) {
    if (!state.survivors.contains(v)) throw std::invalid_argument("compute_ocs: vertex purified");
    VertexSet out(g.num_vertices());
    for (Vertex x : g.neighbors(v)) {
        if (state.survivors.contains(x)) continue;
        bool near_firm = false;
        for (Vertex y : g.neighbors(x)) near_firm |= state.firm.contains(y);
        if (!near_firm) out.insert(x);
    }
    return out;
}

VertexSet compute_ics(const Graph& g, const PurifyState& state, Vertex v) {
    if (!state.survivors.contains(v)) throw std::invalid_argument("compute_ics: vertex purified");
    VertexSet out(g.num_vertices());
    for (Vertex u : g.neighbors(v))
        if (state.survivors.contains(u) && !state.firm.contains(u)) out.insert(u);
    return out;
}

double purification_balance(const Graph& g, const PurifyState& state, Vertex v) {
    return state.alpha * static_cast<double>(compute_ocs(g, state, v).size()) +
           state.beta * static_cast<double>(compute_ics(g, state, v).size());
}

PurifyTracker::PurifyTracker(const Graph& g, const VertexSet& original, double alpha, double beta)
    : graph_(&g),
      state_(PurifyState::initial(original, alpha, beta)),
      survivor_count_(g.num_vertices(), 0),
      firm_count_(g.num_vertices(), 0) {
    for (Vertex v : original.members())
        for (Vertex x : g.neighbors(v)) ++survivor_count_[x];
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
        survivor_uncovered_ += !covered_by_survivors(x);
        ++firm_uncovered_;
    }
}

void PurifyTracker::make_firm(Vertex v) {
    if (!is_survivor(v)) throw std::logic_error("make_firm: vertex is not a survivor");
    if (!state_.firm.insert(v)) return;
    state_.pending.erase(v);
    state_.unconsidered.erase(v);
    if (firm_count_[v] == 0) --firm_uncovered_;
    for (Vertex x : graph_->neighbors(v))
        if (firm_count_[x]++ == 0 && !state_.firm.contains(x)) --firm_uncovered_;
}

void PurifyTracker::make_pending(Vertex v) {
    if (!is_survivor(v) || is_firm(v)) throw std::logic_error("make_pending: vertex is firm or purified");
    state_.unconsidered.erase(v);
    state_.pending.insert(v);
}

void PurifyTracker::purify(Vertex v) {
    if (!is_survivor(v) || is_firm(v)) throw std::logic_error("purify: vertex is firm or purified");
    state_.survivors.erase(v);
    state_.pending.erase(v);
    state_.unconsidered.erase(v);
    state_.purified.push_back(v);
    if (survivor_count_[v] == 0) ++survivor_uncovered_;
    for (Vertex x : graph_->neighbors(v))
        if (--survivor_count_[x] == 0 && !is_survivor(x)) ++survivor_uncovered_;
}

bool PurifyTracker::has_semi_private_neighbor(Vertex v) const {
    for (Vertex x : graph_->neighbors(v))
        if (!is_survivor(x) && survivor_count_[x] == 1) return true;
    return false;
}

Vertex PurifyTracker::sole_survivor_neighbor(Vertex x) const {
    for (Vertex y : graph_->neighbors(x))
        if (is_survivor(y)) return y;
    return kNoVertex;
}

std::size_t PurifyTracker::ocs_size(Vertex v) const {
    std::size_t k = 0;
    for (Vertex x : graph_->neighbors(v)) k += !is_survivor(x) && firm_count_[x] == 0;
    return k;
}

std::size_t PurifyTracker::ics_size(Vertex v) const {
    std::size_t k = 0;
    for (Vertex u : graph_->neighbors(v)) k += is_survivor(u) && !is_firm(u);
    return k;
}

double PurifyTracker::balance(Vertex v) const {
    return state_.alpha * static_cast<double>(ocs_size(v)) + state_.beta * static_cast<double>(ics_size(v));
}

} // namespace domset
