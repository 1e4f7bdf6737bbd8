#pragma once

// Maximum edge count under a matching-number cap and a degree cap: the
// closed formula, an exhaustive cross-check, and a deterministic witness.
//
// Brute-force vertex range: a minimum-order extremal graph needs
//   delta = 1: beta disjoint edges                  -> 2*beta vertices;
//   delta = 2: components are paths and cycles, odd cycles give the best
//              edge yield per matching unit, beta triangles -> 3*beta;
//   delta = 3: any graph on 2*beta+1 vertices has matching number <= beta,
//              and the degree-capped maximum floor(3(2beta+1)/2) = 3beta+1
//              is >= the formula value, attained within that order.
// The sweep therefore runs to max(2*beta+2, 3*beta) vertices, which covers
// every case with beta, delta <= 3 (the 2*beta+2 floor keeps the delta=2,
// beta=2 pair: two disjoint triangles on six vertices).

#include "detection.hpp"
#include "enumeration.hpp"
#include "graph.hpp"

namespace specturan {

inline void check_ch_range(int beta, int delta) {
    if (beta < 1 || delta < 1 || beta > 3 || delta > 3)
        throw std::invalid_argument("chvatal-hanson: supported range is 1 <= beta, delta <= 3");
}

// f(beta, delta) = delta*beta + floor(delta/2) * floor(beta / ceil(delta/2)).
inline long long ch_f(int beta, int delta) {
    check_ch_range(beta, delta);
    return static_cast<long long>(delta) * beta + (delta / 2) * (beta / ((delta + 1) / 2));
}

namespace detail {

struct ChSearchResult {
    long long max_edges = 0;
    Graph witness;  // first graph attaining the final maximum, order-ascending sweep
};

inline ChSearchResult ch_search(int beta, int delta) {
    check_ch_range(beta, delta);
    const int range = std::max(2 * beta + 2, 3 * beta);
    ChSearchResult res;
    res.witness = Graph(1);
    GraphFilter keep = [&](const Graph& g) {
        return g.max_degree() <= delta && matching_number(g) <= beta;
    };
    for (int n = 1; n <= range; ++n) {
        enumerate_graphs(n, [&](const Graph& g) {
            if (g.edge_count() > res.max_edges) {
                res.max_edges = g.edge_count();
                res.witness = g;
            }
        }, keep);
    }
    return res;
}

}  // namespace detail

inline long long ch_f_bruteforce(int beta, int delta) { return detail::ch_search(beta, delta).max_edges; }

// Deterministic extremal witness: first maximum-attaining graph in the
// order-ascending enumeration sweep. Minimal order (an isolated vertex could
// be dropped, so the same edge count would have appeared one order earlier).
inline Graph ch_extremal_Q(int beta, int delta) { return detail::ch_search(beta, delta).witness; }

}  // namespace specturan
