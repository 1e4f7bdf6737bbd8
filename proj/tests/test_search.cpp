#include <catch2/catch_amalgamated.hpp>

#include <specturan/canonical.hpp>
#include <specturan/constructions.hpp>
#include <specturan/search.hpp>

#include "support/oracles.hpp"

using namespace specturan;

TEST_CASE("certify recovers the triangle-free optimum at n = 5") {
    SearchReport rep = certify(5, FlowerSpec(1, {}));
    CHECK(rep.n == 5);
    CHECK(rep.max_edges == 6);
    REQUIRE(rep.edge_witnesses.size() == 1);
    CHECK(rep.edge_witnesses[0] == canonical_graph6(turan(5, 2)));
    // K_{2,3} also carries the largest radius among triangle-free graphs here.
    REQUIRE(rep.lambda_witnesses.size() == 1);
    CHECK(rep.lambda_witnesses[0] == rep.edge_witnesses[0]);
    CHECK(rep.max_lambda == Catch::Approx(std::sqrt(6.0)).margin(1e-8));
    CHECK(rep.graphs_enumerated > 0);
    CHECK(rep.elapsed_seconds >= 0.0);
    CHECK(check_fundamental_inequality(rep));
}

TEST_CASE("certify single-cycle-free maxima match the frozen table") {
    // Forbidding one 5-cycle: exact edge maxima for n = 2..6.
    const long long expected[] = {1, 3, 6, 7, 9};
    FlowerSpec spec(0, {5});
    for (int n = 2; n <= 6; ++n) {
        SearchReport rep = certify(n, spec);
        CHECK(rep.max_edges == expected[n - 2]);
        CHECK(check_fundamental_inequality(rep));
    }
}

TEST_CASE("certify agrees with the labeled brute-force oracle") {
    FlowerSpec spec(0, {5});
    auto keep = [&](const Graph& g) { return !oracle::brute_contains_cycle(g, 5); };
    for (int n = 4; n <= 6; ++n) {
        oracle::LabeledMax truth = oracle::labeled_extremal(n, keep);
        SearchReport rep = certify(n, spec);
        CHECK(rep.max_edges == truth.max_edges);
        CHECK(rep.max_lambda == Catch::Approx(truth.max_lambda).margin(1e-7));
    }
}

TEST_CASE("certify results are independent of the worker count") {
    FlowerSpec spec(1, {});
    SearchReport serial = certify(6, spec, 1);
    SearchReport parallel = certify(6, spec, 3);
    CHECK(serial.max_edges == parallel.max_edges);
    CHECK(serial.max_lambda == parallel.max_lambda);
    CHECK(serial.edge_witnesses == parallel.edge_witnesses);
    CHECK(serial.lambda_witnesses == parallel.lambda_witnesses);
    CHECK(serial.graphs_enumerated == parallel.graphs_enumerated);
}

TEST_CASE("certify order limits") {
    FlowerSpec spec(1, {});
    CHECK_THROWS_AS(certify(0, spec), std::invalid_argument);
    CHECK_THROWS_AS(certify(10, spec), std::invalid_argument);
    CHECK_THROWS_AS(certify(11, spec, 1, true), std::invalid_argument);
}

TEST_CASE("fundamental inequality check responds to its slack") {
    SearchReport rep;
    rep.n = 10;
    rep.max_edges = 25;
    rep.max_lambda = 5.0;
    CHECK(check_fundamental_inequality(rep));
    rep.max_edges = 26;
    CHECK_FALSE(check_fundamental_inequality(rep));
    CHECK(check_fundamental_inequality(rep, 1.1));
}

TEST_CASE("hill climb stays pattern-free and never descends") {
    FlowerSpec spec(1, {5});
    ClimbResult res = hill_climb_spectral(10, spec, 42, 50);
    CHECK_FALSE(contains_flower(res.graph, spec).has_value());
    REQUIRE(!res.lambda_trace.empty());
    CHECK(static_cast<long long>(res.lambda_trace.size()) == res.moves_accepted + 1);
    for (std::size_t i = 1; i < res.lambda_trace.size(); ++i)
        CHECK(res.lambda_trace[i] > res.lambda_trace[i - 1] + kLambdaTieTol);
    // The start is the family construction; the climb may only go up from it.
    double start = spectral_radius(extremal_family_member(10, 1, 1)).lambda;
    CHECK(res.lambda_trace.front() == Catch::Approx(start).margin(1e-9));
    CHECK(res.lambda_trace.back() >= start - 1e-9);
}

TEST_CASE("hill climb is deterministic per seed") {
    FlowerSpec spec(0, {5});
    ClimbResult a = hill_climb_spectral(8, spec, 7, 30);
    ClimbResult b = hill_climb_spectral(8, spec, 7, 30);
    CHECK(to_graph6(a.graph) == to_graph6(b.graph));
    CHECK(a.lambda_trace == b.lambda_trace);
    CHECK(a.moves_accepted == b.moves_accepted);
    CHECK(a.reached_local_optimum == b.reached_local_optimum);
}

TEST_CASE("hill climb local optimum and budget semantics") {
    FlowerSpec spec(0, {5});
    // Generous budget on a small order: the scan certifies local optimality.
    ClimbResult full = hill_climb_spectral(6, spec, 3, 1000000);
    CHECK(full.reached_local_optimum);
    CHECK_FALSE(contains_flower(full.graph, spec).has_value());

    // Zero budget: the start is returned untouched and nothing is claimed.
    ClimbResult none = hill_climb_spectral(6, spec, 3, 0);
    CHECK(none.moves_accepted == 0);
    CHECK(none.lambda_trace.size() == 1);
    CHECK_FALSE(none.reached_local_optimum);

    CHECK_THROWS_AS(hill_climb_spectral(0, spec, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(hill_climb_spectral(2001, spec, 1, 1), std::invalid_argument);
}

TEST_CASE("hill climb falls back to a bipartite start when the family does not fit") {
    // s + k - 1 = 3 per side needs 2*3 <= (n+1)/2, which fails at n = 7.
    FlowerSpec spec(2, {5, 5});
    ClimbResult res = hill_climb_spectral(7, spec, 11, 5);
    CHECK_FALSE(contains_flower(res.graph, spec).has_value());
    CHECK(res.lambda_trace.front() == Catch::Approx(spectral_radius(turan(7, 2)).lambda).margin(1e-9));
}
