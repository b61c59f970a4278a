#include "domset/generate.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace domset {
namespace {

// Unbiased draw in [0, bound) by rejection; independent of <random>'s
// distribution implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
}

std::vector<Edge> sample_gnm(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    const std::uint64_t max_edges = std::uint64_t{n} * (n - 1) / 2;
    if (m > max_edges) throw std::invalid_argument("gen_random_graph: m exceeds n(n-1)/2");

    // Sample the smaller of the edge set and its complement.
    const bool complement = m > max_edges / 2;
    const std::uint64_t picks = complement ? max_edges - m : m;
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(picks) * 2);
    std::vector<std::uint64_t> order;
    order.reserve(static_cast<std::size_t>(picks));
    while (order.size() < picks) {
        auto u = static_cast<Vertex>(draw_below(rng, n));
        auto v = static_cast<Vertex>(draw_below(rng, n));
        if (u == v) continue;
        auto key = pair_key(u, v);
        if (chosen.insert(key).second) order.push_back(key);
    }

    std::vector<Edge> edges;
    edges.reserve(m);
    if (!complement) {
        for (auto key : order) edges.emplace_back(static_cast<Vertex>(key >> 32), static_cast<Vertex>(key));
    } else {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!chosen.count(pair_key(u, v))) edges.emplace_back(u, v);
    }
    return edges;
}

std::vector<Edge> sample_gnp(std::size_t n, double p, std::mt19937_64& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_random_graph: p outside [0, 1]");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (draw_unit(rng) < p) edges.emplace_back(u, v);
    return edges;
}

// Random recursive spanning tree plus distinct extra edges: connected with
// exactly m edges. Dense requests fall back to G(n,m) plus bridging.
std::vector<Edge> sample_connected_gnm(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    const std::uint64_t max_edges = std::uint64_t{n} * (n - 1) / 2;
    if (m + 1 < n) throw std::invalid_argument("gen_random_graph: connected G(n,m) needs m >= n-1");
    if (m > max_edges) throw std::invalid_argument("gen_random_graph: m exceeds n(n-1)/2");
    if (m > max_edges / 2) return {};

    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw_below(rng, i)]);

    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(m * 2);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < n; ++i) {
        Vertex u = perm[i], v = perm[draw_below(rng, i)];
        chosen.insert(pair_key(u, v));
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    while (edges.size() < m) {
        auto u = static_cast<Vertex>(draw_below(rng, n));
        auto v = static_cast<Vertex>(draw_below(rng, n));
        if (u == v || !chosen.insert(pair_key(u, v)).second) continue;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return edges;
}

void connect_components(std::size_t n, std::vector<Edge>& edges, std::mt19937_64& rng) {
    auto g = Graph::from_edges(n, edges);
    auto comps = connected_components(g);
    std::vector<Vertex> joined = comps.front();
    for (std::size_t i = 1; i < comps.size(); ++i) {
        const auto& c = comps[i];
        Vertex a = c[draw_below(rng, c.size())];
        Vertex b = joined[draw_below(rng, joined.size())];
        edges.emplace_back(std::min(a, b), std::max(a, b));
        joined.insert(joined.end(), c.begin(), c.end());
    }
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

} // namespace

Graph gen_random_graph(const RandomGraphSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("gen_random_graph: n must be positive");
    if (spec.n > std::numeric_limits<Vertex>::max() / 2)
        throw std::invalid_argument("gen_random_graph: n too large");
    std::mt19937_64 rng(spec.seed);
    std::vector<Edge> edges;
    bool exact_connected = false;
    if (auto* gnm = std::get_if<Gnm>(&spec.model)) {
        if (spec.connect && spec.n > 1) {
            edges = sample_connected_gnm(spec.n, gnm->edges, rng);
            exact_connected = !edges.empty();
        }
        if (!exact_connected) edges = sample_gnm(spec.n, gnm->edges, rng);
    } else {
        edges = sample_gnp(spec.n, std::get<Gnp>(spec.model).probability, rng);
    }
    if (spec.connect && !exact_connected) connect_components(spec.n, edges, rng);
    return Graph::from_edges(spec.n, edges);
}

RandomGraphSpec parse_generator_spec(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        auto colon = text.find(':', pos);
        parts.push_back(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
        if (colon == std::string_view::npos) break;
        pos = colon + 1;
    }
    auto bad = [&] { return std::invalid_argument("bad generator spec '" + std::string(text) + "'"); };
    if (parts.size() < 3 || parts.size() > 5) throw bad();

    RandomGraphSpec spec;
    std::uint64_t n = 0;
    if (!parse_u64(parts[1], n) || n == 0) throw bad();
    spec.n = static_cast<std::size_t>(n);

    if (parts[0] == "gnm") {
        std::uint64_t m = 0;
        if (!parse_u64(parts[2], m)) throw bad();
        spec.model = Gnm{static_cast<std::size_t>(m)};
    } else if (parts[0] == "gnp") {
        double p = 0;
        std::istringstream in{std::string(parts[2])};
        if (!(in >> p) || !in.eof() || p < 0 || p > 1) throw bad();
        spec.model = Gnp{p};
    } else {
        throw bad();
    }

    for (std::size_t i = 3; i < parts.size(); ++i) {
        auto part = parts[i];
        if (part == "connected") {
            spec.connect = true;
            continue;
        }
        if (part.starts_with("seed")) part.remove_prefix(4);
        if (!parse_u64(part, spec.seed)) throw bad();
    }
    return spec;
}

std::string describe(const RandomGraphSpec& spec) {
    std::ostringstream out;
    if (auto* gnm = std::get_if<Gnm>(&spec.model))
        out << "gnm_" << spec.n << '_' << gnm->edges;
    else
        out << "gnp_" << spec.n << '_' << std::get<Gnp>(spec.model).probability;
    out << "_s" << spec.seed;
    if (spec.connect) out << "_c";
    return out.str();
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    e.emplace_back(0, static_cast<Vertex>(n - 1));
    return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, e);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) e.emplace_back(u, static_cast<Vertex>(a + v));
    return Graph::from_edges(a + b, e);
}

} // namespace domset
