#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "domset/exact.hpp"
#include "domset/graph.hpp"

namespace domset {

struct BoundsReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    bool connected = false;
    /// ceil(n / (Delta + 1))
    std::size_t lower = 0;
    /// floor(min{n/2, n - Delta, n ln(delta+1) / (delta+1)})
    std::size_t upper = 0;
    double ratio_cap = 0.0;
};

/// ceil(n / (Delta + 1)). Throws on an empty graph.
std::size_t lower_bound(const Graph& g);

/// floor(min{n/2, n - Delta, n ln(delta+1)/(delta+1)}). Meaningful for
/// connected graphs only; callers check connectivity.
std::size_t upper_bound_U(const Graph& g);

/// (Delta+1)/2 for 1 <= Delta <= 4, ln(Delta+1) + 1 otherwise.
/// Throws std::invalid_argument for Delta == 0.
double ratio_cap(std::size_t max_degree);

BoundsReport compute_bounds(const Graph& g);

struct QualityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct QualityReport {
    std::vector<QualityCheck> checks;
    std::optional<double> ratio;

    bool all_passed() const;
};

/// Checks lower <= |S*|, |S*| <= U (connected graphs only), and, with a
/// finished exact result, |S*| / gamma <= ratio_cap(Delta).
/// Throws std::invalid_argument if s_star does not dominate.
QualityReport verify_quality(const Graph& g, const VertexSet& s_star,
                             const ExactResult* exact = nullptr);

} // namespace domset
