#pragma once

// Named graph families: Turán graphs, flowers, cycle bouquets, split graphs,
// the edge-extremal family (Turán plus an embedded quotient), fan extremal
// graphs, and the small standard graphs the tests lean on.

#include "chvatal_hanson.hpp"
#include "flower_spec.hpp"
#include "graph.hpp"

namespace specturan {

// Complete r-partite, parts as equal as possible, larger parts first and
// contiguous: part boundaries at ceil(n/r)-sized blocks for the first
// n mod r parts. Part 0 is the canonical "larger side" for embeddings.
inline Graph turan(int n, int r) {
    if (r < 1) throw std::invalid_argument("turan: need at least one part");
    if (n < 0) throw std::invalid_argument("turan: negative order");
    Graph g(n);
    std::vector<int> part(static_cast<std::size_t>(n));
    int big = n % r == 0 ? n / r : n / r + 1;
    int bigs = n % r == 0 ? r : n % r;
    for (int v = 0; v < n; ++v) {
        if (v < big * bigs) part[static_cast<std::size_t>(v)] = v / big;
        else part[static_cast<std::size_t>(v)] = bigs + (v - big * bigs) / (n / r);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

// t vertices, t-1 edges.
inline Graph path(int t) {
    if (t < 1) throw std::invalid_argument("path: need at least one vertex");
    Graph g(t);
    for (int v = 0; v + 1 < t; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least three vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// K_{1,t}: centre 0.
inline Graph star(int t) {
    Graph g(t + 1);
    for (int v = 1; v <= t; ++v) g.add_edge(0, v);
    return g;
}

// t disjoint edges.
inline Graph matching(int t) {
    Graph g(2 * t);
    for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

// Apex at 0, then the triangle pairs, then each cycle path in spec order.
inline Graph flower(const FlowerSpec& spec) {
    Graph g(spec.vertex_count());
    int next = 1;
    for (int i = 0; i < spec.s; ++i) {
        g.add_edge(0, next);
        g.add_edge(0, next + 1);
        g.add_edge(next, next + 1);
        next += 2;
    }
    for (int t : spec.lengths) {
        int first = next;
        g.add_edge(0, first);
        for (int j = 1; j < t - 1; ++j) {
            g.add_edge(next, next + 1);
            ++next;
        }
        g.add_edge(next, 0);
        ++next;
    }
    return g;
}

// k cycles of odd length q through one shared vertex.
inline Graph cycle_bouquet(int k, int q) {
    if (k < 1) throw std::invalid_argument("cycle_bouquet: need at least one cycle");
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("cycle_bouquet: length must be odd and >= 3");
    if (q == 3) return flower(FlowerSpec(k, {}));
    return flower(FlowerSpec(0, std::vector<int>(static_cast<std::size_t>(k), q)));
}

// T_2(n) with q placed on the lowest-numbered vertices of the larger side.
inline Graph embed_into_turan(int n, const Graph& q) {
    int side = (n + 1) / 2;
    if (q.order() > side) throw std::invalid_argument("embed_into_turan: embedded graph exceeds a side");
    Graph g = turan(n, 2);
    for (auto [u, v] : q.edges()) g.add_edge(u, v);
    return g;
}

enum class FamilyVariant { bipartiteQ, threeTriangles };

// Edge-extremal family member for the pattern with s triangles and k longer
// odd cycles: T_2(n) with K_{s+k-1,s+k-1} in one side, or three disjoint
// triangles for the one exceptional pattern shape (s=3, k=1).
// Edge count: floor(n^2/4) + (s+k-1)^2.
inline Graph extremal_family_member(int n, int s, int k, FamilyVariant variant = FamilyVariant::bipartiteQ) {
    if (s < 0 || k < 1) throw std::invalid_argument("extremal_family_member: need s >= 0 and k >= 1");
    if (variant == FamilyVariant::threeTriangles && !(s == 3 && k == 1))
        throw std::invalid_argument("extremal_family_member: triangle variant exists only at s=3, k=1");
    Graph q = variant == FamilyVariant::threeTriangles
                  ? Graph(9, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {7, 8}, {6, 8}})
                  : complete_bipartite(s + k - 1, s + k - 1);
    return embed_into_turan(n, q);
}

// Largest k-fan-free graph: T_2(n) plus an embedded quotient. Odd k embeds
// two disjoint K_k (k^2 - k extra edges, n >= 4k-1); even k embeds a
// degree-capped matching-capped extremal graph on 2k-1 vertices
// (k^2 - 3k/2 extra edges, n >= 4k-3). Even k is served by the exhaustive
// witness search, so only k <= 4 is constructible there.
inline Graph fan_extremal(int n, int k) {
    if (k < 2) throw std::invalid_argument("fan_extremal: need k >= 2");
    if (k % 2 == 1) {
        if (n < 4 * k - 1) throw std::invalid_argument("fan_extremal: order below 4k-1");
        Graph q(2 * k);
        for (int c = 0; c < 2; ++c)
            for (int u = 0; u < k; ++u)
                for (int v = u + 1; v < k; ++v) q.add_edge(c * k + u, c * k + v);
        return embed_into_turan(n, q);
    }
    if (n < 4 * k - 3) throw std::invalid_argument("fan_extremal: order below 4k-3");
    Graph core = ch_extremal_Q(k - 1, k - 1);  // throws beyond k = 4
    if (core.order() > 2 * k - 1) throw std::runtime_error("fan_extremal: witness exceeds expected order");
    Graph q(2 * k - 1);
    for (auto [u, v] : core.edges()) q.add_edge(u, v);
    return embed_into_turan(n, q);
}

// S_{n,k}: K_k fully joined to an independent set of n-k vertices.
inline Graph split_graph(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("split_graph: k outside [0, n]");
    Graph g(n);
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

}  // namespace specturan
