#pragma once

// Executable shadow of the stability pipeline: a locally optimal bipartition,
// the heavy-same-side set W and the low-degree set L, side freeness, the
// Perron entry floor, and every measured inequality as an (lhs, rhs, holds)
// triple. True max-cut is replaced by seeded multi-restart local search; the
// certificate exposed is local optimality (no single vertex move gains), the
// only property the arguments actually use.

#include <cmath>
#include <cstdlib>
#include <random>

#include "detection.hpp"
#include "flower_spec.hpp"
#include "graph.hpp"
#include "spectral.hpp"

namespace specturan {

struct Bipartition {
    VertexList side_S;
    VertexList side_T;
    long long cut = 0;
    long long within = 0;
};

constexpr int kMaxCutRestarts = 32;

namespace detail {

// Side membership kept as a bitmask so same/cross degree counts are a few
// popcounts per vertex.
struct SideMask {
    std::vector<std::uint64_t> in_T;
    explicit SideMask(std::size_t words) : in_T(words, 0) {}
    bool t(int v) const { return (in_T[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u; }
    void flip(int v) { in_T[static_cast<std::size_t>(v) / 64] ^= std::uint64_t{1} << (v % 64); }
};

// In-place single-vertex-move ascent to local optimality.
inline void local_moves(const Graph& g, SideMask& side) {
    const int n = g.order();
    const std::size_t W = g.words_per_row();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            const std::uint64_t* row = g.row(v);
            int to_T = 0;
            int deg = 0;
            for (std::size_t w = 0; w < W; ++w) {
                to_T += std::popcount(row[w] & side.in_T[w]);
                deg += std::popcount(row[w]);
            }
            int same = side.t(v) ? to_T : deg - to_T;
            if (2 * same > deg) {
                side.flip(v);
                moved = true;
            }
        }
    }
}

inline long long cut_value(const Graph& g, const SideMask& side) {
    long long cut = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (side.t(v)) continue;
        const std::uint64_t* row = g.row(v);
        for (std::size_t w = 0; w < g.words_per_row(); ++w) cut += std::popcount(row[w] & side.in_T[w]);
    }
    return cut;
}

}  // namespace detail

inline Bipartition max_cut_partition(const Graph& g, std::uint64_t seed, int restarts = kMaxCutRestarts) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("max_cut_partition: empty graph");
    std::mt19937_64 rng(seed);
    detail::SideMask best(g.words_per_row());
    long long best_cut = -1;
    for (int r = 0; r < restarts; ++r) {
        detail::SideMask side(g.words_per_row());
        for (int v = 0; v < n; ++v)
            if (rng() & 1) side.flip(v);
        detail::local_moves(g, side);
        long long cut = detail::cut_value(g, side);
        if (cut > best_cut) {
            best_cut = cut;
            best = side;
        }
    }
    Bipartition part;
    for (int v = 0; v < n; ++v)
        (best.t(v) ? part.side_T : part.side_S).push_back(v);
    part.cut = best_cut;
    part.within = g.edge_count() - best_cut;
    return part;
}

// Vertices with at least delta*n neighbours on their own side.
inline VertexList classify_W(const Graph& g, const Bipartition& part, double delta) {
    if (delta <= 0 || delta >= 1) throw std::invalid_argument("classify_W: delta outside (0,1)");
    std::vector<char> side(static_cast<std::size_t>(g.order()), 0);
    for (int v : part.side_T) side[static_cast<std::size_t>(v)] = 1;
    VertexList w;
    double bar = delta * g.order();
    for (int v = 0; v < g.order(); ++v) {
        int same = 0;
        for (int u : g.neighbors(v))
            if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) ++same;
        if (same >= bar) w.push_back(v);
    }
    return w;
}

// Vertices of degree at most (1/2 - c0) n with c0 = 1/(8c(s+k)).
inline VertexList classify_L(const Graph& g, const FlowerSpec& spec) {
    double c0 = 1.0 / (8.0 * spec.max_cycle_length() * (spec.s + spec.k()));
    double bar = (0.5 - c0) * g.order();
    VertexList l;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= bar) l.push_back(v);
    return l;
}

struct LemmaGap {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;  // lhs-vs-rhs direction is encoded per entry below
};

struct StabilityReport {
    Bipartition partition;
    VertexList W;
    VertexList L;
    long long side_balance = 0;     // ||S| - |T||
    SideFreenessReport freeness_S;  // at j = s + k
    SideFreenessReport freeness_T;
    double min_perron_entry = 0.0;
    double lambda = 0.0;
    long long e_G1 = 0;  // within-side edges
    long long e_G2 = 0;  // missing cross edges |S||T| - cut
    bool contains_forbidden = false;
    double delta_used = 0.0;
    std::vector<LemmaGap> gaps;
};

inline double default_stability_delta(const FlowerSpec& spec) {
    double c = spec.max_cycle_length();
    double sk = spec.s + spec.k();
    return 1.0 / (100.0 * c * c * sk * sk);
}

// Gap list: edge floor e >= n^2/4 - (s+k)cn; the four near-extremal bounds
// (edges, cut, side sizes, λ); the Perron entry floor; the within-side edge
// surplus cap e_G1 - e_G2 <= (s+k-1)^2; and the cut-versus-geometric-mean
// defect bound. All evaluated with slack 1e-6 on the λ-dependent ones.
inline StabilityReport stability_report(const Graph& g, const FlowerSpec& spec, double delta = 0.0,
                                        std::uint64_t seed = 1) {
    if (!g.is_connected()) throw std::invalid_argument("stability_report: needs a connected graph");
    const double n = g.order();
    const double sk = spec.s + spec.k();
    const double c = spec.max_cycle_length();
    StabilityReport rep;
    rep.delta_used = delta > 0 ? delta : default_stability_delta(spec);
    rep.partition = max_cut_partition(g, seed);
    rep.W = classify_W(g, rep.partition, rep.delta_used);
    rep.L = classify_L(g, spec);
    rep.side_balance = std::llabs(static_cast<long long>(rep.partition.side_S.size()) -
                                  static_cast<long long>(rep.partition.side_T.size()));
    int j = spec.s + spec.k();
    rep.freeness_S = side_freeness_check(g, rep.partition.side_S, j);
    rep.freeness_T = side_freeness_check(g, rep.partition.side_T, j);
    SpectralResult sp = spectral_radius(g);
    rep.lambda = sp.lambda;
    rep.min_perron_entry = perron_entry_min(sp);
    rep.e_G1 = rep.partition.within;
    long long ss = static_cast<long long>(rep.partition.side_S.size());
    long long tt = static_cast<long long>(rep.partition.side_T.size());
    rep.e_G2 = ss * tt - rep.partition.cut;
    rep.contains_forbidden = contains_flower(g, spec).has_value();

    const double slack = 1e-6;
    auto ge = [&](std::string name, double lhs, double rhs) {
        rep.gaps.push_back({std::move(name), lhs, rhs, lhs >= rhs - slack});
    };
    auto le = [&](std::string name, double lhs, double rhs) {
        rep.gaps.push_back({std::move(name), lhs, rhs, lhs <= rhs + slack});
    };
    double e = static_cast<double>(g.edge_count());
    ge("edge_floor", e, n * n / 4.0 - sk * c * n);
    ge("near_extremal_edges", e, n * n / 4.0 - 12.0 * sk * sk);
    ge("near_extremal_cut", static_cast<double>(rep.partition.cut), n * n / 4.0 - 14.0 * sk * sk);
    le("near_extremal_side_dev", std::max(std::abs(ss - n / 2.0), std::abs(tt - n / 2.0)), 4.0 * sk);
    le("near_extremal_lambda", rep.lambda, n / 2.0 + 5.0 * sk);
    ge("perron_entry_floor", rep.min_perron_entry, 1.0 - 120.0 * sk * sk / n);
    le("within_side_surplus", static_cast<double>(rep.e_G1 - rep.e_G2), (sk - 1.0) * (sk - 1.0));
    double mean_defect = 2.0 / n * std::floor(n * n / 4.0) - std::sqrt(static_cast<double>(ss) * static_cast<double>(tt));
    le("cut_mean_defect", mean_defect, 7200.0 * sk * sk * sk * sk / (n * (n - 240.0 * sk * sk)));
    return rep;
}

}  // namespace specturan
