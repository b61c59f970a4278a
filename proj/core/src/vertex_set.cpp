#include "domset/vertex_set.hpp"

#include <stdexcept>

namespace domset {

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) {
        if (v >= universe) throw std::out_of_range("VertexSet: member outside universe");
        s.insert(v);
    }
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
    return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s;
    s.bits_.assign(universe, 1);
    s.count_ = universe;
    return s;
}

bool VertexSet::insert(Vertex v) {
    if (bits_[v]) return false;
    bits_[v] = 1;
    ++count_;
    return true;
}

bool VertexSet::erase(Vertex v) {
    if (!bits_[v]) return false;
    bits_[v] = 0;
    --count_;
    return true;
}

void VertexSet::clear() {
    std::fill(bits_.begin(), bits_.end(), 0);
    count_ = 0;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (std::size_t v = 0; v < bits_.size(); ++v)
        if (bits_[v]) out.push_back(static_cast<Vertex>(v));
    return out;
}

} // namespace domset
