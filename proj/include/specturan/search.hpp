#pragma once

// Desk-scale certification: exact pattern-free edge and spectral-radius
// maxima by exhaustive isomorphism-class enumeration, plus a seeded
// first-improvement hill climb for orders beyond enumeration reach.

#include <chrono>
#include <mutex>
#include <random>

#include "constructions.hpp"
#include "detection.hpp"
#include "enumeration.hpp"
#include "spectral.hpp"

namespace specturan {

struct SearchReport {
    int n = 0;
    FlowerSpec spec{0, {5}};
    long long max_edges = 0;
    double max_lambda = 0.0;
    std::vector<std::string> edge_witnesses;    // canonical graph6, sorted
    std::vector<std::string> lambda_witnesses;  // within kLambdaTieTol of the max
    long long graphs_enumerated = 0;            // pattern-free classes examined
    double elapsed_seconds = 0.0;
};

// λ comparisons in search treat values this close as tied.
constexpr double kLambdaTieTol = 1e-9;

constexpr int kCertifyOrderLimit = 9;        // 274,668 classes in minutes
constexpr int kCertifyExtendedLimit = 10;    // ~12M classes, explicit opt-in

// Exact maxima over pattern-free graphs on n vertices. Pattern-freeness is
// hereditary under vertex deletion, so the enumeration prunes with it.
// Witness sets and counts are independent of the worker count.
inline SearchReport certify(int n, const FlowerSpec& spec, int threads = 1, bool allow_large = false) {
    if (n < 1) throw std::invalid_argument("certify: order must be positive");
    if (n > (allow_large ? kCertifyExtendedLimit : kCertifyOrderLimit))
        throw std::invalid_argument("certify: order exceeds enumeration limit");
    auto t0 = std::chrono::steady_clock::now();

    SearchReport rep;
    rep.n = n;
    rep.spec = spec;

    GraphFilter keep = [&](const Graph& g) { return !contains_flower(g, spec).has_value(); };

    struct Partial {
        long long max_edges = -1;
        double max_lambda = -1.0;
        std::vector<std::string> edge_w;
        std::vector<std::pair<double, std::string>> lambda_w;
        long long count = 0;
    };
    int workers = std::max(1, threads);
    std::vector<Partial> parts(static_cast<std::size_t>(workers));

    auto absorb = [&](const Graph& g, int w) {
        Partial& p = parts[static_cast<std::size_t>(w)];
        ++p.count;
        std::string g6 = to_graph6(g);
        long long e = g.edge_count();
        if (e > p.max_edges) {
            p.max_edges = e;
            p.edge_w.clear();
        }
        if (e == p.max_edges) p.edge_w.push_back(g6);
        double lam = spectral_radius(g).lambda;
        if (lam > p.max_lambda + kLambdaTieTol) {
            p.max_lambda = lam;
            std::erase_if(p.lambda_w, [&](const auto& pr) { return pr.first < p.max_lambda - kLambdaTieTol; });
        }
        if (lam >= p.max_lambda - kLambdaTieTol) p.lambda_w.emplace_back(lam, g6);
    };

    if (workers == 1) {
        enumerate_graphs(n, [&](const Graph& g) { absorb(g, 0); }, keep);
    } else {
        enumerate_graphs_parallel(n, workers, absorb, keep);
    }

    for (const Partial& p : parts) {
        rep.graphs_enumerated += p.count;
        rep.max_edges = std::max(rep.max_edges, p.max_edges);
        rep.max_lambda = std::max(rep.max_lambda, p.max_lambda);
    }
    for (const Partial& p : parts) {
        if (p.max_edges == rep.max_edges)
            rep.edge_witnesses.insert(rep.edge_witnesses.end(), p.edge_w.begin(), p.edge_w.end());
        for (const auto& [lam, g6] : p.lambda_w)
            if (lam >= rep.max_lambda - kLambdaTieTol) rep.lambda_witnesses.push_back(g6);
    }
    std::sort(rep.edge_witnesses.begin(), rep.edge_witnesses.end());
    std::sort(rep.lambda_witnesses.begin(), rep.lambda_witnesses.end());

    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// max_edges <= (n/2) * max_lambda, within slack.
inline bool check_fundamental_inequality(const SearchReport& rep, double tol = 1e-6) {
    return static_cast<double>(rep.max_edges) <= rep.n / 2.0 * rep.max_lambda + tol;
}

struct ClimbResult {
    Graph graph;
    std::vector<double> lambda_trace;  // λ after the start and each accepted move
    long long moves_accepted = 0;
    bool reached_local_optimum = false;
};

namespace detail {

// Pattern-free start: the family construction when it fits and is clean,
// otherwise the balanced bipartite graph (no odd cycles at all).
inline Graph climb_start(int n, const FlowerSpec& spec) {
    if (spec.k() >= 1) {
        int q_side = spec.s + spec.k() - 1;
        if (2 * q_side <= (n + 1) / 2) {
            Graph g = extremal_family_member(n, spec.s, spec.k());
            if (!contains_flower(g, spec)) return g;
        }
    }
    return turan(n, 2);
}

}  // namespace detail

// Seeded first-improvement local search maximizing the spectral radius over
// pattern-free graphs: single-edge additions, deletions, and swaps, candidate
// order reshuffled each accepted move. Budget caps accepted moves; when the
// full neighbourhood is scanned without improvement the result is a certified
// local optimum. Deterministic for a fixed seed.
inline ClimbResult hill_climb_spectral(int n, const FlowerSpec& spec, std::uint64_t seed, long long budget) {
    if (n < 1 || n > 2000) throw std::invalid_argument("hill_climb_spectral: order outside [1, 2000]");
    std::mt19937_64 rng(seed);
    ClimbResult res{detail::climb_start(n, spec), {}, 0, false};
    double lam = spectral_radius(res.graph).lambda;
    res.lambda_trace.push_back(lam);

    using Move = std::array<int, 4>;  // add u-v: {u,v,-1,-1}; delete: {-1,-1,u,v}; swap: {add_u,add_v,del_u,del_v}
    while (res.moves_accepted < budget) {
        EdgeList edges = res.graph.edges();
        EdgeList holes;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!res.graph.has_edge(u, v)) holes.emplace_back(u, v);

        std::vector<Move> moves;
        moves.reserve(holes.size() + edges.size() + holes.size() * edges.size());
        for (auto [u, v] : holes) moves.push_back({u, v, -1, -1});
        for (auto [u, v] : edges) moves.push_back({-1, -1, u, v});
        for (auto [au, av] : holes)
            for (auto [du, dv] : edges) moves.push_back({au, av, du, dv});
        std::shuffle(moves.begin(), moves.end(), rng);

        bool improved = false;
        for (const Move& m : moves) {
            Graph cand = res.graph;
            if (m[2] >= 0) cand.remove_edge(m[2], m[3]);
            if (m[0] >= 0) cand.add_edge(m[0], m[1]);
            double cl = spectral_radius(cand).lambda;
            if (cl <= lam + kLambdaTieTol) continue;
            if (contains_flower(cand, spec)) continue;
            res.graph = cand;
            lam = cl;
            res.lambda_trace.push_back(lam);
            ++res.moves_accepted;
            improved = true;
            break;
        }
        if (!improved) {
            res.reached_local_optimum = true;
            break;
        }
    }
    return res;
}

}  // namespace specturan
