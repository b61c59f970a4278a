#include "domset/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace domset {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::uint64_t> labels) {
    if (!labels.empty() && labels.size() != n)
        throw std::invalid_argument("Graph: label count does not match vertex count");

    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("Graph: endpoint out of range");
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        ++degree[u];
        ++degree[v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.targets_.resize(g.offsets_[n]);

    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last)
            throw std::invalid_argument("Graph: duplicate edge " + std::to_string(v) + "-" +
                                        std::to_string(*dup));
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
    if (u >= num_vertices() || v >= num_vertices()) return false;
    auto nb = degree(u) <= degree(v) ? neighbors(u) : neighbors(v);
    Vertex other = degree(u) <= degree(v) ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

DegreeExtremes degree_extremes(const Graph& g) {
    if (g.num_vertices() == 0) throw std::invalid_argument("degree_extremes: empty graph");
    DegreeExtremes d{g.degree(0), g.degree(0)};
    for (Vertex v = 1; v < g.num_vertices(); ++v) {
        d.min_degree = std::min(d.min_degree, g.degree(v));
        d.max_degree = std::max(d.max_degree, g.degree(v));
    }
    return d;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto& comp = comps.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.num_vertices() > 0 && connected_components(g).size() == 1;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (s.contains(v)) continue;
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return s.contains(u); }))
            return false;
    }
    return true;
}

VertexSet semi_private_neighbors(const Graph& g, const VertexSet& survivors, Vertex v) {
    if (!survivors.contains(v))
        throw std::invalid_argument("semi_private_neighbors: vertex not in the reference set");
    VertexSet out(g.num_vertices());
    for (Vertex x : g.neighbors(v)) {
        if (survivors.contains(x)) continue;
        std::size_t inside = 0;
        for (Vertex y : g.neighbors(x)) inside += survivors.contains(y);
        if (inside == 1) out.insert(x);
    }
    return out;
}

VertexSet private_neighbors(const Graph& g, const VertexSet& s, Vertex v) {
    // Same set as the semi-private neighbors taken w.r.t. s itself.
    return semi_private_neighbors(g, s, v);
}

std::vector<std::uint64_t> external_ids(const Graph& g, const VertexSet& s) {
    std::vector<std::uint64_t> out;
    out.reserve(s.size());
    for (Vertex v : s.members()) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace domset
