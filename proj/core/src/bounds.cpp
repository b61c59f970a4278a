#include "domset/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace domset {

std::size_t lower_bound(const Graph& g) {
    const auto [delta, Delta] = degree_extremes(g);
    (void)delta;
    const std::size_t n = g.num_vertices();
    return (n + Delta) / (Delta + 1);
}

std::size_t upper_bound_U(const Graph& g) {
    const auto [delta, Delta] = degree_extremes(g);
    const auto n = static_cast<double>(g.num_vertices());
    const double d1 = static_cast<double>(delta) + 1.0;
    const double u = std::min({n / 2.0, n - static_cast<double>(Delta), n * std::log(d1) / d1});
    return static_cast<std::size_t>(std::floor(u));
}

double ratio_cap(std::size_t max_degree) {
    if (max_degree == 0) throw std::invalid_argument("ratio_cap: maximum degree must be at least 1");
    const auto d = static_cast<double>(max_degree);
    return max_degree <= 4 ? (d + 1.0) / 2.0 : std::log(d + 1.0) + 1.0;
}

BoundsReport compute_bounds(const Graph& g) {
    BoundsReport r;
    const auto ext = degree_extremes(g);
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.min_degree = ext.min_degree;
    r.max_degree = ext.max_degree;
    r.connected = is_connected(g);
    r.lower = lower_bound(g);
    r.upper = upper_bound_U(g);
    r.ratio_cap = r.max_degree > 0 ? ratio_cap(r.max_degree) : 1.0;
    return r;
}

bool QualityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const QualityCheck& c) { return c.passed; });
}

QualityReport verify_quality(const Graph& g, const VertexSet& s_star, const ExactResult* exact) {
    if (!is_dominating(g, s_star)) throw std::invalid_argument("verify_quality: set is not dominating");
    const auto b = compute_bounds(g);
    const std::size_t size = s_star.size();
    QualityReport report;
    auto detail = [](auto lhs, const char* op, auto rhs) {
        std::ostringstream s;
        s << lhs << ' ' << op << ' ' << rhs;
        return s.str();
    };

    report.checks.push_back({"lower<=size", b.lower <= size, detail(b.lower, "<=", size)});
    if (b.connected) report.checks.push_back({"size<=U", size <= b.upper, detail(size, "<=", b.upper)});
    if (exact && !exact->timed_out && exact->gamma > 0) {
        const double ratio = static_cast<double>(size) / static_cast<double>(exact->gamma);
        report.ratio = ratio;
        if (b.max_degree > 0)
            report.checks.push_back({"ratio<=cap", ratio <= b.ratio_cap, detail(ratio, "<=", b.ratio_cap)});
    }
    return report;
}

} // namespace domset
