#include <doctest.h>

#include <cmath>
#include <random>

#include "domset/bounds.hpp"
#include "domset/exact.hpp"
#include "domset/generate.hpp"
#include "oracles.hpp"

using namespace domset;

namespace {

/// n=100, m=2687, Delta=74 (vertex 0), delta=6 (vertex 99): U = n - Delta = 26.
Graph table3_shaped() {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= 74; ++v) e.emplace_back(0, v);
    for (Vertex v = 1; v <= 6; ++v) e.emplace_back(99, v);
    // Circulant on 1..98 with offsets 1..26, plus 59 edges at offset 27.
    for (Vertex i = 0; i < 98; ++i)
        for (Vertex d = 1; d <= 26; ++d) e.emplace_back(1 + i, 1 + (i + d) % 98);
    for (Vertex i = 0; i < 59; ++i) e.emplace_back(1 + i, 1 + (i + 27) % 98);
    return Graph::from_edges(100, e);
}

void check_exact(const Graph& g, std::size_t gamma) {
    auto r = exact_gamma(g);
    CHECK_FALSE(r.timed_out);
    CHECK(r.gamma == gamma);
    CHECK(r.witness.size() == gamma);
    CHECK(oracle::dominates(g, r.witness));
}

} // namespace

TEST_SUITE("exact_and_bounds") {

TEST_CASE("exact_gamma examples") {
    check_exact(complete_graph(5), 1);
    check_exact(cycle_graph(6), 2);
    for (std::size_t n = 3; n <= 12; ++n) {
        INFO("P_", n);
        const auto g = path_graph(n);
        CHECK(oracle::brute_force_gamma(g) == (n + 2) / 3);
        check_exact(g, (n + 2) / 3);
    }
    check_exact(star_graph(8), 1);
    check_exact(Graph::from_edges(3, {}), 3);
}

TEST_CASE("exact_gamma equals exhaustive enumeration for n <= 8") {
    // Every graph on up to 5 vertices.
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
            std::vector<Edge> e;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) e.push_back(pairs[i]);
            auto g = Graph::from_edges(n, e);
            CHECK(exact_gamma(g).gamma == oracle::brute_force_gamma(g));
        }
    }
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 1500; ++trial) {
        auto g = gen_random_graph({6 + rng() % 3, Gnp{0.1 + 0.1 * static_cast<double>(rng() % 7)}, rng()});
        auto r = exact_gamma(g);
        CHECK(r.gamma == oracle::brute_force_gamma(g));
        CHECK(oracle::dominates(g, r.witness));
    }
}

TEST_CASE("exact_gamma budget and size limit") {
    auto g = gen_random_graph({60, Gnp{0.1}, 3});
    ExactBudget tiny;
    tiny.max_nodes = 5;
    auto r = exact_gamma(g, tiny);
    CHECK(r.timed_out);
    CHECK(r.nodes <= 6);
    if (r.gamma > 0) CHECK(oracle::dominates(g, r.witness));

    CHECK_THROWS_AS(exact_gamma(path_graph(kExactMaxVertices + 1)), std::invalid_argument);
    CHECK_NOTHROW(exact_gamma(path_graph(kExactMaxVertices)));
    CHECK(exact_gamma(path_graph(kExactMaxVertices)).gamma == (kExactMaxVertices + 2) / 3);
}

TEST_CASE("lower bound") {
    CHECK(lower_bound(complete_graph(5)) == 1);
    CHECK(lower_bound(cycle_graph(6)) == 2);
    CHECK(lower_bound(star_graph(8)) == 1);
    CHECK(lower_bound(Graph::from_edges(4, {})) == 4);
}

TEST_CASE("upper bound U") {
    CHECK(upper_bound_U(star_graph(8)) == 1);
    CHECK(upper_bound_U(complete_graph(4)) == 1);
    CHECK(upper_bound_U(cycle_graph(6)) == 2);
    CHECK(exact_gamma(cycle_graph(6)).gamma <= upper_bound_U(cycle_graph(6)));

    // min{2, 2, 4 ln 2 / 2 = 1.386} floors to 1 while gamma(P4) = 2: the
    // third term is not an upper bound on small paths.
    CHECK(upper_bound_U(path_graph(4)) == 1);
    CHECK(oracle::brute_force_gamma(path_graph(4)) == 2);

    // On K2 the third term is ln 2 < 1, so U = 0 < lower = 1.
    CHECK(upper_bound_U(path_graph(2)) == 0);
    CHECK(lower_bound(path_graph(2)) == 1);
}

TEST_CASE("ratio cap") {
    CHECK(ratio_cap(4) == doctest::Approx(2.5));
    CHECK(ratio_cap(2) == doctest::Approx(1.5));
    CHECK(ratio_cap(1) == doctest::Approx(1.0));
    CHECK(ratio_cap(5) == doctest::Approx(std::log(6.0) + 1));
    CHECK(ratio_cap(10) == doctest::Approx(3.3979).epsilon(1e-4));
    CHECK_THROWS_AS(ratio_cap(0), std::invalid_argument);
    for (std::size_t d = 2; d < 200; ++d) CHECK(ratio_cap(d) > 1.0);
}

TEST_CASE("compute_bounds") {
    auto b = compute_bounds(cycle_graph(6));
    CHECK(b.n == 6);
    CHECK(b.m == 6);
    CHECK(b.min_degree == 2);
    CHECK(b.max_degree == 2);
    CHECK(b.connected);
    CHECK(b.lower == 2);
    CHECK(b.upper == 2);
    CHECK(b.ratio_cap == doctest::Approx(1.5));
}

TEST_CASE("property: lower <= gamma") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 400; ++trial) {
        auto g = gen_random_graph({2 + rng() % 11, Gnp{0.15 + 0.05 * static_cast<double>(rng() % 10)}, rng(), true});
        const auto gamma = oracle::brute_force_gamma(g);
        CHECK(lower_bound(g) <= gamma);
    }
}

TEST_CASE("verify_quality") {
    SUBCASE("C6 with {1,4}") {
        auto g = cycle_graph(6);
        auto ex = exact_gamma(g);
        auto q = verify_quality(g, VertexSet::of(6, {0, 3}), &ex);
        CHECK(q.all_passed());
        REQUIRE(q.ratio);
        CHECK(*q.ratio == doctest::Approx(1.0));
        CHECK(q.checks.size() == 3);
    }
    SUBCASE("S = V on K3 fails the ratio check") {
        auto g = complete_graph(3);
        auto ex = exact_gamma(g);
        auto q = verify_quality(g, VertexSet::full(3), &ex);
        CHECK_FALSE(q.all_passed());
        CHECK(*q.ratio == doctest::Approx(3.0));
        auto it = std::find_if(q.checks.begin(), q.checks.end(), [](const auto& c) { return c.name == "ratio<=cap"; });
        REQUIRE(it != q.checks.end());
        CHECK_FALSE(it->passed);
    }
    SUBCASE("Table 3 row: |V|=100, |E|=2687, gamma=6, |S*|=7, U=26") {
        auto g = table3_shaped();
        CHECK(g.num_edges() == 2687);
        CHECK(upper_bound_U(g) == 26);
        auto s = VertexSet::of(100, {0, 1, 87, 10, 20, 30, 40});
        REQUIRE(s.size() == 7);
        ExactResult ex;
        ex.gamma = 6;
        auto q = verify_quality(g, s, &ex);
        CHECK(q.all_passed());
        CHECK(*q.ratio == doctest::Approx(7.0 / 6.0));
    }
    SUBCASE("no exact result means no ratio") {
        auto q = verify_quality(path_graph(3), VertexSet::of(3, {1}));
        CHECK_FALSE(q.ratio);
        CHECK(q.all_passed());
    }
    SUBCASE("timed-out exact result is ignored") {
        ExactResult ex;
        ex.gamma = 1;
        ex.timed_out = true;
        CHECK_FALSE(verify_quality(path_graph(3), VertexSet::of(3, {1}), &ex).ratio);
    }
    SUBCASE("non-dominating set is a hard failure") {
        CHECK_THROWS_AS(verify_quality(path_graph(3), VertexSet::of(3, {0})), std::invalid_argument);
    }
}

} // TEST_SUITE
