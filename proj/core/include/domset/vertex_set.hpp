#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "domset/types.hpp"

namespace domset {

/// Dense membership set over the universe 0..n-1 with O(1) cardinality.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}

    static VertexSet of(std::size_t universe, std::span<const Vertex> members);
    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Vertex v) const noexcept { return v < bits_.size() && bits_[v] != 0; }

    /// Returns true if v was not already present.
    bool insert(Vertex v);
    /// Returns true if v was present.
    bool erase(Vertex v);
    void clear();

    /// Members in ascending order.
    std::vector<Vertex> members() const;

    bool operator==(const VertexSet& other) const = default;

private:
    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

} // namespace domset
