#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "domset/graph.hpp"

namespace domset {

struct Gnm {
    std::size_t edges = 0;
};
struct Gnp {
    double probability = 0.0;
};
using EdgeModel = std::variant<Gnm, Gnp>;

struct RandomGraphSpec {
    std::size_t n = 0;
    EdgeModel model = Gnm{};
    std::uint64_t seed = 0;
    /// Make the graph connected. Sparse G(n,m) draws a random spanning tree plus
    /// extra edges, keeping exactly m edges (needs m >= n-1). Dense G(n,m) and
    /// G(n,p) join components with bridging edges, which adds to m.
    bool connect = false;
};

/// Deterministic for a fixed spec: the sampler uses mt19937_64 with a
/// hand-written bounded draw, so output does not depend on the standard
/// library's distribution implementations.
Graph gen_random_graph(const RandomGraphSpec& spec);

/// Parses "gnm:<n>:<m>:seed<s>" or "gnp:<n>:<p>:seed<s>" (the "seed" prefix is
/// optional). Throws std::invalid_argument on malformed input.
RandomGraphSpec parse_generator_spec(std::string_view text);

std::string describe(const RandomGraphSpec& spec);

// Structured families, labels 1..n in path/cycle order.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Vertex 0 is the center.
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

} // namespace domset
