#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "domset/types.hpp"
#include "domset/vertex_set.hpp"

namespace domset {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending. Vertices carry an external label used
/// for reporting; by default label(v) == v + 1, matching the 1-based input
/// formats.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n vertices. Throws std::invalid_argument on a
    /// self-loop, a duplicate edge, or an endpoint >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                            std::vector<std::uint64_t> labels = {});

    std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(Vertex u, Vertex v) const noexcept;

    std::uint64_t label(Vertex v) const noexcept { return labels_.empty() ? std::uint64_t{v} + 1 : labels_[v]; }
    bool has_custom_labels() const noexcept { return !labels_.empty(); }

    /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    std::vector<std::uint64_t> labels_;
};

struct DegreeExtremes {
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
};

/// Minimum and maximum degree. Throws std::invalid_argument on an empty graph.
DegreeExtremes degree_extremes(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// True iff every vertex outside s has a neighbor in s.
bool is_dominating(const Graph& g, const VertexSet& s);

/// Vertices u outside s with N(u) ∩ s = {v}. Throws if v is not in s.
VertexSet private_neighbors(const Graph& g, const VertexSet& s, Vertex v);

/// Vertices x outside survivors whose only neighbor in survivors is v.
/// Throws if v is not in survivors.
VertexSet semi_private_neighbors(const Graph& g, const VertexSet& survivors, Vertex v);

/// Sorted external labels of the members of s.
std::vector<std::uint64_t> external_ids(const Graph& g, const VertexSet& s);

} // namespace domset
