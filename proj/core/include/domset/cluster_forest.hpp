#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

enum class ClusterCase {
    kNewCluster, // no forest neighbor: singleton cluster
    kAttach,     // one forest neighbor: becomes its child
    kMerge,      // several forest neighbors: new root adopting all of them
};

const char* to_string(ClusterCase c) noexcept;

struct InsertOutcome {
    ClusterCase kind = ClusterCase::kNewCluster;
    /// Former (parent, child) edges removed when a child was re-parented.
    std::vector<Edge> deleted_edges;
};

/// Rooted forest over the vertices of a dominating set. Parent edges are
/// edges of the underlying graph and the trees partition the inserted vertices.
///
/// Children lists are kept in ascending id order. Roots are kept in cluster
/// creation order; a merge appends its new root and drops the absorbed ones.
class ClusterForest {
public:
    ClusterForest() = default;
    explicit ClusterForest(std::size_t universe);

    /// Inserts v given its forest neighbors (the already-inserted vertices
    /// adjacent to v in g). Throws std::invalid_argument if v is present or
    /// forest_neighbors disagrees with g.
    InsertOutcome insert(const Graph& g, Vertex v, std::span<const Vertex> forest_neighbors);

    std::size_t universe() const noexcept { return parent_.size(); }
    std::size_t size() const noexcept { return size_; }
    bool contains(Vertex v) const noexcept { return v < present_.size() && present_[v] != 0; }

    std::optional<Vertex> parent(Vertex v) const noexcept;
    std::span<const Vertex> children(Vertex v) const noexcept { return children_[v]; }
    std::span<const Vertex> roots() const noexcept { return roots_; }
    Vertex root_of(Vertex v) const noexcept { return root_[v]; }

    /// Index into roots() of the cluster containing v.
    std::size_t cluster_index(Vertex v) const;

    /// Members of the cluster rooted at r, breadth-first, children ascending.
    std::vector<Vertex> cluster_members(Vertex root) const;

    /// Distance from v to its root.
    std::size_t depth(Vertex v) const;

    /// Throws std::logic_error describing the first broken invariant:
    /// parent edges in g, acyclicity, root bookkeeping, sorted children,
    /// and (when given) vertex set equal to expected.
    void validate(const Graph& g, const VertexSet* expected = nullptr) const;

private:
    void relabel_subtree(Vertex top, Vertex root);

    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<Vertex> roots_;
    std::vector<Vertex> root_;
    std::vector<std::uint8_t> present_;
    std::size_t size_ = 0;
};

} // namespace domset
