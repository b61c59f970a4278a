#include "domset/greedy.hpp"

#include <queue>
#include <sstream>

#include <json.hpp>

namespace domset {

std::size_t active_degree(const Graph& g, const VertexSet& covered, Vertex v) {
    std::size_t d = 0;
    for (Vertex u : g.neighbors(v)) d += !covered.contains(u);
    return d;
}

Stage1Result greedy_dominating_set(const Graph& g) {
    const std::size_t n = g.num_vertices();
    Stage1Result out{{{}, VertexSet(n)}, ClusterForest(n), {}};
    if (n == 0) return out;

    VertexSet covered(n);
    std::vector<std::size_t> active(n);
    for (Vertex v = 0; v < n; ++v) active[v] = g.degree(v);

    // Max-heap on (active degree, -id). Entries go stale when a degree drops;
    // the fresh entry is pushed at that moment, stale ones are skipped on pop.
    using Entry = std::pair<std::size_t, Vertex>;
    auto worse = [](const Entry& a, const Entry& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
    for (Vertex v = 0; v < n; ++v) heap.emplace(active[v], v);

    Vertex next_uncovered = 0;
    std::vector<Vertex> forest_nbrs;
    while (covered.size() < n) {
        Vertex pick = kNoVertex;
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            if (out.set.members.contains(v) || d != active[v]) {
                heap.pop();
                continue;
            }
            if (d > 0) {
                pick = v;
                heap.pop();
            }
            break;
        }
        if (pick == kNoVertex) {
            // Every active degree is zero: take uncovered vertices by id.
            while (covered.contains(next_uncovered)) ++next_uncovered;
            pick = next_uncovered;
        }

        GreedyStep step;
        step.vertex = pick;
        step.active_degree = active[pick];

        forest_nbrs.clear();
        for (Vertex u : g.neighbors(pick))
            if (out.set.members.contains(u)) forest_nbrs.push_back(u);
        step.forest_neighbors = forest_nbrs.size();

        out.set.order.push_back(pick);
        out.set.members.insert(pick);
        auto outcome = out.forest.insert(g, pick, forest_nbrs);
        step.cluster_case = outcome.kind;
        step.deleted_edges = std::move(outcome.deleted_edges);
        out.trace.push_back(std::move(step));

        auto cover = [&](Vertex x) {
            if (!covered.insert(x)) return;
            for (Vertex w : g.neighbors(x)) {
                --active[w];
                if (!out.set.members.contains(w)) heap.emplace(active[w], w);
            }
        };
        cover(pick);
        for (Vertex x : g.neighbors(pick)) cover(x);
    }
    return out;
}

std::string trace_to_json_lines(const Graph& g, const GreedyTrace& trace) {
    std::ostringstream out;
    std::size_t h = 0;
    for (const auto& step : trace) {
        nlohmann::ordered_json deleted = nlohmann::ordered_json::array();
        for (auto [p, c] : step.deleted_edges) deleted.push_back({g.label(p), g.label(c)});
        nlohmann::ordered_json rec = {
            {"h", ++h},
            {"v", g.label(step.vertex)},
            {"active_degree", step.active_degree},
            {"forest_neighbors", step.forest_neighbors},
            {"case", to_string(step.cluster_case)},
            {"deleted_edges", deleted},
        };
        out << rec.dump() << '\n';
    }
    return out.str();
}

} // namespace domset
