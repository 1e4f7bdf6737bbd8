#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <specturan/constructions.hpp>
#include <specturan/enumeration.hpp>
#include <specturan/spectral.hpp>

#include "support/oracles.hpp"

using namespace specturan;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("adjacency radius matches closed forms") {
    CHECK(spectral_radius(complete(4)).lambda == Catch::Approx(3.0).margin(1e-9));
    CHECK(spectral_radius(cycle(5)).lambda == Catch::Approx(2.0).margin(1e-9));
    CHECK(spectral_radius(complete_bipartite(2, 3)).lambda == Catch::Approx(std::sqrt(6.0)).margin(1e-9));
    CHECK(spectral_radius(star(7)).lambda == Catch::Approx(std::sqrt(7.0)).margin(1e-9));
    CHECK(spectral_radius(petersen()).lambda == Catch::Approx(3.0).margin(1e-9));
    // T_2(n) = K_{n/2,n/2} for even n
    CHECK(spectral_radius(turan(20, 2)).lambda == Catch::Approx(10.0).margin(1e-8));
    CHECK(spectral_radius(Graph(1)).lambda == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("perron vector entries on paths and stars") {
    // Star: centre entry is the max, each leaf sits at 1/sqrt(t).
    SpectralResult st = spectral_radius(star(4));
    REQUIRE(st.connected);
    CHECK(st.vector[0] == Catch::Approx(1.0).margin(1e-9));
    for (int leaf = 1; leaf <= 4; ++leaf)
        CHECK(st.vector[static_cast<std::size_t>(leaf)] == Catch::Approx(0.5).margin(1e-8));
    CHECK(perron_entry_min(st) == Catch::Approx(0.5).margin(1e-8));

    // P3: ends at 1/sqrt(2) of the middle.
    SpectralResult p3 = spectral_radius(path(3));
    CHECK(p3.lambda == Catch::Approx(std::sqrt(2.0)).margin(1e-9));
    CHECK(p3.vector[1] == Catch::Approx(1.0).margin(1e-9));
    CHECK(p3.vector[0] == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-8));

    // P4: radius is the golden ratio, ends at 1/phi of the middles.
    SpectralResult p4 = spectral_radius(path(4));
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(p4.lambda == Catch::Approx(phi).margin(1e-9));
    CHECK(perron_entry_min(p4) == Catch::Approx(1.0 / phi).margin(1e-8));
}

TEST_CASE("adjacency radius agrees with the dense solver on every small class") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_graphs(n, [&](const Graph& g) {
            SpectralResult r = spectral_radius(g);
            REQUIRE(r.converged);
            CHECK(r.lambda == Catch::Approx(oracle::dense_spectral_radius(g)).margin(1e-8));
        });
    }
}

TEST_CASE("adjacency radius agrees with the dense solver on random graphs") {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_graph(30, rng);
        SpectralResult r = spectral_radius(g);
        REQUIRE(r.converged);
        CHECK(r.lambda == Catch::Approx(oracle::dense_spectral_radius(g)).margin(1e-7));
        CHECK(r.residual <= kSpectralTol);
    }
}

TEST_CASE("signless laplacian radius closed forms and oracle agreement") {
    CHECK(signless_laplacian_radius(complete(4)).lambda == Catch::Approx(6.0).margin(1e-9));
    CHECK(signless_laplacian_radius(complete_bipartite(2, 3)).lambda == Catch::Approx(5.0).margin(1e-9));
    CHECK(signless_laplacian_radius(cycle(7)).lambda == Catch::Approx(4.0).margin(1e-8));

    for (int n = 1; n <= 5; ++n) {
        enumerate_graphs(n, [&](const Graph& g) {
            SpectralResult r = signless_laplacian_radius(g);
            REQUIRE(r.converged);
            CHECK(r.lambda == Catch::Approx(oracle::dense_signless_radius(g)).margin(1e-8));
        });
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_graph(25, rng);
        CHECK(signless_laplacian_radius(g).lambda ==
              Catch::Approx(oracle::dense_signless_radius(g)).margin(1e-7));
    }
}

TEST_CASE("disconnected graphs report the best component") {
    // K4 on {0..3} plus C5 on {4..8}: radius 3 comes from the K4 side.
    Graph g(9);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    for (int i = 0; i < 5; ++i) g.add_edge(4 + i, 4 + (i + 1) % 5);

    SpectralResult r = spectral_radius(g);
    CHECK_FALSE(r.connected);
    CHECK(r.lambda == Catch::Approx(3.0).margin(1e-9));
    for (int v = 0; v < 4; ++v)
        CHECK(r.vector[static_cast<std::size_t>(v)] == Catch::Approx(1.0).margin(1e-8));
    for (int v = 4; v < 9; ++v)
        CHECK(r.vector[static_cast<std::size_t>(v)] == 0.0);

    CHECK_THROWS_AS(perron_entry_min(r), std::invalid_argument);
    CHECK_FALSE(spectral_radius(matching(3)).connected);
}

TEST_CASE("iteration cap is honoured") {
    SpectralResult r = spectral_radius(path(4), 1e-30, 3);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations >= 3);
    // The estimate is still in the right neighbourhood.
    CHECK(r.lambda == Catch::Approx((1.0 + std::sqrt(5.0)) / 2.0).margin(0.5));
}

TEST_CASE("rayleigh quotient") {
    Graph g = petersen();
    std::vector<double> ones(10, 1.0);
    CHECK(rayleigh_quotient(g, ones) == Catch::Approx(3.0).margin(1e-12));

    Graph s = star(5);
    std::vector<double> ones6(6, 1.0);
    // All-ones gives the average degree 2e/n, below the radius on irregular graphs.
    CHECK(rayleigh_quotient(s, ones6) == Catch::Approx(10.0 / 6.0).margin(1e-12));
    SpectralResult r = spectral_radius(s);
    CHECK(rayleigh_quotient(s, r.vector) == Catch::Approx(r.lambda).margin(1e-9));

    CHECK_THROWS_AS(rayleigh_quotient(g, ones6), std::invalid_argument);
    std::vector<double> zero(10, 0.0);
    CHECK_THROWS_AS(rayleigh_quotient(g, zero), std::invalid_argument);
}

TEST_CASE("edge-triangle lower bound on edge count") {
    // K6: e = 15, lambda = 5, t = 20, so the bound reads 15 >= 25 - 12.
    EdgeTriangleReport k6 = check_edge_triangle_bound(complete(6));
    CHECK(k6.holds);
    CHECK(k6.lhs == Catch::Approx(15.0));
    CHECK(k6.rhs == Catch::Approx(13.0).margin(1e-6));
    CHECK(k6.triangles == 20);

    // Triangle-free: e >= lambda^2 exactly characterizes tightness pressure.
    EdgeTriangleReport pet = check_edge_triangle_bound(petersen());
    CHECK(pet.holds);
    CHECK(pet.triangles == 0);
    CHECK(pet.rhs == Catch::Approx(9.0).margin(1e-6));

    // Edgeless: lambda = 0 makes the right side -infinity.
    EdgeTriangleReport empty = check_edge_triangle_bound(Graph(5));
    CHECK(empty.holds);
    CHECK(empty.rhs == -std::numeric_limits<double>::infinity());

    for (int n = 1; n <= 6; ++n)
        enumerate_graphs(n, [&](const Graph& g) { CHECK(check_edge_triangle_bound(g).holds); });

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 6; ++trial)
        CHECK(check_edge_triangle_bound(random_graph(50, rng)).holds);
}

TEST_CASE("degree sandwich on the radius") {
    DegreeBoundsReport reg = degree_bounds_check(petersen());
    CHECK(reg.holds);
    CHECK(reg.avg_deg == Catch::Approx(3.0));
    CHECK(reg.lambda == Catch::Approx(3.0).margin(1e-9));
    CHECK(reg.max_deg == 3);

    DegreeBoundsReport st = degree_bounds_check(star(5));
    CHECK(st.holds);
    CHECK(st.avg_deg == Catch::Approx(10.0 / 6.0));
    CHECK(st.lambda == Catch::Approx(std::sqrt(5.0)).margin(1e-9));
    CHECK(st.max_deg == 5);

    for (int n = 1; n <= 6; ++n)
        enumerate_graphs(n, [&](const Graph& g) { CHECK(degree_bounds_check(g).holds); });

    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 6; ++trial)
        CHECK(degree_bounds_check(random_graph(40, rng)).holds);
}
