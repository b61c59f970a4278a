#include "domset/cluster_forest.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace domset {

const char* to_string(ClusterCase c) noexcept {
    switch (c) {
    case ClusterCase::kNewCluster: return "new_cluster";
    case ClusterCase::kAttach: return "attach";
    case ClusterCase::kMerge: return "merge";
    }
    return "?";
}

ClusterForest::ClusterForest(std::size_t universe)
    : parent_(universe, kNoVertex), children_(universe), root_(universe, kNoVertex), present_(universe, 0) {}

InsertOutcome ClusterForest::insert(const Graph& g, Vertex v, std::span<const Vertex> forest_neighbors) {
    if (v >= universe()) throw std::invalid_argument("ClusterForest: vertex outside universe");
    if (contains(v)) throw std::invalid_argument("ClusterForest: vertex already inserted");

    std::vector<Vertex> nbrs(forest_neighbors.begin(), forest_neighbors.end());
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
        throw std::invalid_argument("ClusterForest: repeated forest neighbor");
    std::size_t expected = 0;
    for (Vertex u : g.neighbors(v)) expected += contains(u);
    for (Vertex x : nbrs)
        if (!contains(x) || !g.has_edge(v, x))
            throw std::invalid_argument("ClusterForest: listed neighbor is not an adjacent forest vertex");
    if (expected != nbrs.size())
        throw std::invalid_argument("ClusterForest: forest neighbors incomplete");

    present_[v] = 1;
    ++size_;
    InsertOutcome out;

    if (nbrs.empty()) {
        out.kind = ClusterCase::kNewCluster;
        root_[v] = v;
        roots_.push_back(v);
        return out;
    }
    if (nbrs.size() == 1) {
        out.kind = ClusterCase::kAttach;
        Vertex x = nbrs.front();
        parent_[v] = x;
        auto& ch = children_[x];
        ch.insert(std::upper_bound(ch.begin(), ch.end(), v), v);
        root_[v] = root_[x];
        return out;
    }

    out.kind = ClusterCase::kMerge;
    for (Vertex x : nbrs) {
        if (Vertex p = parent_[x]; p != kNoVertex) {
            auto& ch = children_[p];
            ch.erase(std::find(ch.begin(), ch.end(), x));
            out.deleted_edges.emplace_back(p, x);
        } else {
            roots_.erase(std::find(roots_.begin(), roots_.end(), x));
        }
        parent_[x] = v;
        children_[v].push_back(x);
    }
    roots_.push_back(v);
    relabel_subtree(v, v);
    return out;
}

void ClusterForest::relabel_subtree(Vertex top, Vertex root) {
    std::vector<Vertex> stack{top};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        root_[u] = root;
        for (Vertex c : children_[u]) stack.push_back(c);
    }
}

std::optional<Vertex> ClusterForest::parent(Vertex v) const noexcept {
    if (parent_[v] == kNoVertex) return std::nullopt;
    return parent_[v];
}

std::size_t ClusterForest::cluster_index(Vertex v) const {
    if (!contains(v)) throw std::out_of_range("ClusterForest: vertex not in forest");
    auto it = std::find(roots_.begin(), roots_.end(), root_[v]);
    return static_cast<std::size_t>(it - roots_.begin());
}

std::vector<Vertex> ClusterForest::cluster_members(Vertex root) const {
    std::vector<Vertex> out{root};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (Vertex c : children_[out[i]]) out.push_back(c);
    return out;
}

std::size_t ClusterForest::depth(Vertex v) const {
    std::size_t d = 0;
    while (parent_[v] != kNoVertex) {
        v = parent_[v];
        ++d;
    }
    return d;
}

void ClusterForest::validate(const Graph& g, const VertexSet* expected) const {
    auto fail = [](const std::string& what) { throw std::logic_error("ClusterForest: " + what); };
    std::size_t seen = 0;
    std::vector<std::uint8_t> visited(universe(), 0);
    for (Vertex r : roots_) {
        if (!contains(r)) fail("root not present");
        if (parent_[r] != kNoVertex) fail("root has a parent");
        for (Vertex u : cluster_members(r)) {
            if (visited[u]) fail("vertex reachable twice (cycle or shared child)");
            visited[u] = 1;
            ++seen;
            if (root_[u] != r) fail("stale root label at " + std::to_string(u));
            const auto& ch = children_[u];
            if (!std::is_sorted(ch.begin(), ch.end())) fail("children not sorted");
            for (Vertex c : ch) {
                if (parent_[c] != u) fail("child/parent mismatch");
                if (!g.has_edge(u, c)) fail("parent edge not in graph");
            }
        }
    }
    if (seen != size_) fail("some vertices unreachable from roots");
    if (expected) {
        if (expected->size() != size_) fail("vertex set differs from expected set");
        for (Vertex v : expected->members())
            if (!contains(v)) fail("expected vertex missing");
    }
}

} // namespace domset
