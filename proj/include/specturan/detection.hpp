#pragma once

// Pattern containment and the structural statistics the bounds consume:
// flower embeddings, triangle counts, longest-path probes, matching numbers
// (blossom contraction, exact on general graphs), star/matching freeness of
// vertex sets, and a plain subgraph-isomorphism backtracker used as an
// independent oracle for the flower search.

#include <optional>
#include <queue>

#include "flower_spec.hpp"
#include "graph.hpp"

namespace specturan {

// ---------------------------------------------------------------- matching

// Maximum matching via augmenting paths with blossom contraction.
// match[v] = partner or -1.
inline std::vector<int> maximum_matching(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

    std::vector<int> match(static_cast<std::size_t>(n), -1);
    std::vector<int> p(static_cast<std::size_t>(n)), base(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n)), blossom(static_cast<std::size_t>(n));

    // Cheap greedy start; augmenting search below only pays per deficiency.
    for (int v = 0; v < n; ++v) {
        if (match[static_cast<std::size_t>(v)] != -1) continue;
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (match[static_cast<std::size_t>(u)] == -1) {
                match[static_cast<std::size_t>(v)] = u;
                match[static_cast<std::size_t>(u)] = v;
                break;
            }
        }
    }

    auto lca = [&](int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match[static_cast<std::size_t>(a)] == -1) break;
            a = p[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = p[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])])] = 1;
            p[static_cast<std::size_t>(v)] = child;
            child = match[static_cast<std::size_t>(v)];
            v = p[static_cast<std::size_t>(child)];
        }
    };

    auto find_path = [&](int root) -> bool {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[static_cast<std::size_t>(v)]) {
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<std::size_t>(to)] != -1 &&
                     p[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (p[static_cast<std::size_t>(to)] == -1) {
                    p[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] == -1) {
                        // Alternate matched/unmatched edges back to the root.
                        int u = to;
                        while (u != -1) {
                            int pv = p[static_cast<std::size_t>(u)];
                            int ppv = match[static_cast<std::size_t>(pv)];
                            match[static_cast<std::size_t>(u)] = pv;
                            match[static_cast<std::size_t>(pv)] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = 1;
                    q.push(match[static_cast<std::size_t>(to)]);
                }
            }
        }
        return false;
    };

    for (int v = 0; v < n; ++v)
        if (match[static_cast<std::size_t>(v)] == -1) find_path(v);
    return match;
}

inline int matching_number(const Graph& g) {
    auto match = maximum_matching(g);
    int paired = 0;
    for (int v = 0; v < g.order(); ++v)
        if (match[static_cast<std::size_t>(v)] != -1) ++paired;
    return paired / 2;
}

// ---------------------------------------------------------------- counting

inline long long triangle_count(const Graph& g) {
    long long three_t = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) three_t += g.common_neighbor_count(u, v);
    return three_t / 3;
}

// ------------------------------------------------------------- path probe

namespace detail {

struct BitSet {
    std::vector<std::uint64_t> w;
    explicit BitSet(int n) : w((static_cast<std::size_t>(n) + 63) / 64, 0) {}
    bool test(int i) const { return (w[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u; }
    void set(int i) { w[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
    void clear(int i) { w[static_cast<std::size_t>(i) / 64] &= ~(std::uint64_t{1} << (i % 64)); }
};

inline bool extend_path(const Graph& g, BitSet& used, VertexList& path, int want) {
    if (static_cast<int>(path.size()) == want) return true;
    for (int u : g.neighbors(path.back())) {
        if (used.test(u)) continue;
        used.set(u);
        path.push_back(u);
        if (extend_path(g, used, path, want)) return true;
        path.pop_back();
        used.clear(u);
    }
    return false;
}

}  // namespace detail

// Witness for a path on t vertices, if any.
inline std::optional<VertexList> has_path_on(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("has_path_on: t must be positive");
    if (t > g.order()) return std::nullopt;
    auto comps = g.components();
    for (const auto& comp : comps) {
        if (static_cast<int>(comp.size()) < t) continue;
        for (int s : comp) {
            detail::BitSet used(g.order());
            VertexList path{s};
            used.set(s);
            if (detail::extend_path(g, used, path, t)) return path;
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------ flower search

struct FlowerEmbedding {
    int apex = -1;
    std::vector<std::pair<int, int>> triangles;  // non-apex pair per triangle
    std::vector<VertexList> cycles;              // t−1 non-apex vertices, path order

    // Re-verify adjacency, endpoint attachment and global disjointness.
    bool verify(const Graph& g, const FlowerSpec& spec) const {
        if (static_cast<int>(triangles.size()) != spec.s) return false;
        if (static_cast<int>(cycles.size()) != spec.k()) return false;
        detail::BitSet seen(g.order());
        auto claim = [&](int v) {
            if (v == apex || seen.test(v)) return false;
            seen.set(v);
            return true;
        };
        for (auto [a, b] : triangles)
            if (!claim(a) || !claim(b) || !g.has_edge(a, b) || !g.has_edge(apex, a) || !g.has_edge(apex, b))
                return false;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            const auto& path = cycles[i];
            if (static_cast<int>(path.size()) != spec.lengths[i] - 1) return false;
            for (int v : path)
                if (!claim(v)) return false;
            for (std::size_t j = 0; j + 1 < path.size(); ++j)
                if (!g.has_edge(path[j], path[j + 1])) return false;
            if (!g.has_edge(apex, path.front()) || !g.has_edge(apex, path.back())) return false;
        }
        return true;
    }
};

namespace detail {

struct FlowerSearch {
    const Graph& g;
    int apex;
    std::vector<int> petals;  // cycle lengths ascending, so triangles claim
                              // the scarce short structures first
    BitSet used;
    std::vector<VertexList> found;  // aligned with petals
    const std::uint64_t* apex_row;
    std::size_t W;
    // reach[idx][j]: vertices from which a walk of exactly j steps over
    // currently-unused vertices can end at an unused apex neighbour. Walks
    // over-approximate paths, so absence is a sound reason to prune; the
    // masks go stale as the path claims vertices, which only weakens them.
    std::vector<std::vector<std::vector<std::uint64_t>>> reach;

    FlowerSearch(const Graph& graph, int a, const FlowerSpec& spec)
        : g(graph), apex(a), petals(spec.petal_lengths()), used(graph.order()) {
        std::reverse(petals.begin(), petals.end());
        used.set(apex);
        apex_row = g.row(apex);
        W = g.words_per_row();
        found.resize(petals.size());
        reach.resize(petals.size());
    }

    bool build_reach(std::size_t idx) {
        const int steps = petals[idx] - 2;
        auto& lv = reach[idx];
        lv.assign(static_cast<std::size_t>(steps) + 1, std::vector<std::uint64_t>(W, 0));
        for (std::size_t w = 0; w < W; ++w) lv[0][w] = apex_row[w] & ~used.w[w];
        for (int j = 1; j <= steps; ++j) {
            auto& cur = lv[static_cast<std::size_t>(j)];
            const auto& prev = lv[static_cast<std::size_t>(j) - 1];
            for (std::size_t w = 0; w < W; ++w) {
                std::uint64_t bits = prev[w];
                while (bits) {
                    const int v = static_cast<int>(w * 64) + std::countr_zero(bits);
                    bits &= bits - 1;
                    const std::uint64_t* row = g.row(v);
                    for (std::size_t x = 0; x < W; ++x) cur[x] |= row[x];
                }
            }
            std::uint64_t any = 0;
            for (std::size_t w = 0; w < W; ++w) {
                cur[w] &= ~used.w[w];
                any |= cur[w];
            }
            if (!any) return false;
        }
        return true;
    }

    // Swapping two unused vertices with equal rows outside the pair is an
    // automorphism fixing everything else, so a candidate twinned with an
    // already-failed sibling fails the same way. Endpoints additionally
    // carry the `> start` order constraint, so only candidates that passed
    // it enter the failed list.
    bool twin_of_failed(int u, const VertexList& tried) const {
        const std::uint64_t* ru = g.row(u);
        for (int t : tried) {
            const std::uint64_t* rt = g.row(t);
            bool same = true;
            for (std::size_t w = 0; w < W && same; ++w) {
                std::uint64_t diff = ru[w] ^ rt[w];
                if (static_cast<std::size_t>(u) / 64 == w) diff &= ~(std::uint64_t{1} << (u % 64));
                if (static_cast<std::size_t>(t) / 64 == w) diff &= ~(std::uint64_t{1} << (t % 64));
                if (diff) same = false;
            }
            if (same) return true;
        }
        return false;
    }

    bool path_step(std::size_t idx, int start, VertexList& path) {
        const int want = petals[idx] - 1;
        const int size = static_cast<int>(path.size());
        if (size == want) {
            int last = path.back();
            // Endpoint order start < last cancels the traversal direction.
            if (last > start && g.has_edge(apex, last)) {
                found[idx] = path;
                int next_floor = (idx + 1 < petals.size() && petals[idx + 1] == petals[idx]) ? start : -1;
                if (petal(idx + 1, next_floor)) return true;
            }
            return false;
        }
        const bool closing = size + 1 == want;
        const auto& viable = reach[idx][static_cast<std::size_t>(want - size - 1)];
        const std::uint64_t* row = g.row(path.back());
        VertexList tried;
        for (std::size_t w = 0; w < W; ++w) {
            std::uint64_t bits = row[w] & viable[w] & ~used.w[w];
            while (bits) {
                const int u = static_cast<int>(w * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                if (closing && u <= start) continue;  // order check would reject it anyway
                if (twin_of_failed(u, tried)) continue;
                used.set(u);
                path.push_back(u);
                if (path_step(idx, start, path)) return true;
                path.pop_back();
                used.clear(u);
                tried.push_back(u);
            }
        }
        return false;
    }

    // floor: equal-length petals take strictly increasing start vertices.
    bool petal(std::size_t idx, int floor) {
        if (idx == petals.size()) return true;
        if (!build_reach(idx)) return false;
        const auto& starts = reach[idx][static_cast<std::size_t>(petals[idx]) - 2];
        for (std::size_t w = 0; w < W; ++w) {
            std::uint64_t bits = starts[w] & apex_row[w] & ~used.w[w];
            while (bits) {
                const int start = static_cast<int>(w * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                if (start <= floor) continue;
                used.set(start);
                VertexList path{start};
                if (path_step(idx, start, path)) return true;
                used.clear(start);
            }
        }
        return false;
    }
};

}  // namespace detail

inline std::optional<FlowerEmbedding> contains_flower_at(const Graph& g, int apex, const FlowerSpec& spec) {
    if (apex < 0 || apex >= g.order()) throw std::out_of_range("contains_flower_at: apex outside graph");
    if (g.order() < spec.vertex_count()) return std::nullopt;
    if (g.degree(apex) < 2 * (spec.s + spec.k())) return std::nullopt;
    detail::FlowerSearch search(g, apex, spec);
    if (!search.petal(0, -1)) return std::nullopt;
    FlowerEmbedding emb;
    emb.apex = apex;
    // Petals were searched ascending: triangles first, then cycles shortest
    // first; the embedding lists cycles in spec order (descending).
    const std::size_t s = static_cast<std::size_t>(spec.s);
    for (std::size_t i = 0; i < s; ++i) emb.triangles.emplace_back(search.found[i][0], search.found[i][1]);
    for (std::size_t j = search.petals.size(); j > s; --j) emb.cycles.push_back(search.found[j - 1]);
    return emb;
}

inline std::optional<FlowerEmbedding> contains_flower(const Graph& g, const FlowerSpec& spec) {
    if (g.order() < spec.vertex_count()) return std::nullopt;
    VertexList order(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int apex : order) {
        if (g.degree(apex) < 2 * (spec.s + spec.k())) break;  // sorted: all later apexes fail too
        if (auto emb = contains_flower_at(g, apex, spec)) return emb;
    }
    return std::nullopt;
}

// --------------------------------------------------------- side freeness

struct SideFreenessReport {
    bool star_free = true;       // Δ(G[S]) ≤ j−1
    bool matching_free = true;   // β(G[S]) ≤ j−1
    std::optional<VertexList> star_witness;               // centre then j leaves
    std::optional<std::vector<std::pair<int, int>>> matching_witness;  // j disjoint edges
};

inline SideFreenessReport side_freeness_check(const Graph& g, const VertexList& side, int j) {
    if (j < 1) throw std::invalid_argument("side_freeness_check: j must be positive");
    SideFreenessReport rep;
    Graph h = g.induced_subgraph(side);
    for (int v = 0; v < h.order(); ++v) {
        if (h.degree(v) >= j) {
            rep.star_free = false;
            VertexList w{side[static_cast<std::size_t>(v)]};
            auto nb = h.neighbors(v);
            for (int i = 0; i < j; ++i) w.push_back(side[static_cast<std::size_t>(nb[static_cast<std::size_t>(i)])]);
            rep.star_witness = w;
            break;
        }
    }
    auto match = maximum_matching(h);
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < h.order(); ++v)
        if (match[static_cast<std::size_t>(v)] > v)
            pairs.emplace_back(side[static_cast<std::size_t>(v)],
                               side[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])]);
    if (static_cast<int>(pairs.size()) >= j) {
        rep.matching_free = false;
        pairs.resize(static_cast<std::size_t>(j));
        rep.matching_witness = pairs;
    }
    return rep;
}

// ------------------------------------------------------------- iso oracle

// Subgraph (not induced) containment by injective backtracking with degree
// pruning. Pattern order capped: this is the slow, obviously-correct check.
inline bool subgraph_iso_oracle(const Graph& g, const Graph& h) {
    const int hn = h.order();
    if (hn > 10) throw std::invalid_argument("subgraph_iso_oracle: pattern order exceeds 10");
    if (hn > g.order() || h.edge_count() > g.edge_count()) return false;

    // Map pattern vertices in an order that keeps each new vertex attached
    // to the mapped prefix when possible (fewer candidates per step).
    VertexList order;
    std::vector<char> placed(static_cast<std::size_t>(hn), 0);
    for (int step = 0; step < hn; ++step) {
        int pick = -1, best = -1;
        for (int v = 0; v < hn; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int attached = 0;
            for (int u : h.neighbors(v))
                if (placed[static_cast<std::size_t>(u)]) ++attached;
            int score = attached * 100 + h.degree(v);
            if (score > best) {
                best = score;
                pick = v;
            }
        }
        placed[static_cast<std::size_t>(pick)] = 1;
        order.push_back(pick);
    }

    std::vector<int> img(static_cast<std::size_t>(hn), -1);
    std::vector<char> taken(static_cast<std::size_t>(g.order()), 0);
    auto rec = [&](auto&& self, int step) -> bool {
        if (step == hn) return true;
        int v = order[static_cast<std::size_t>(step)];
        for (int cand = 0; cand < g.order(); ++cand) {
            if (taken[static_cast<std::size_t>(cand)]) continue;
            if (g.degree(cand) < h.degree(v)) continue;
            bool ok = true;
            for (int u : h.neighbors(v)) {
                int iu = img[static_cast<std::size_t>(u)];
                if (iu != -1 && !g.has_edge(iu, cand)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            img[static_cast<std::size_t>(v)] = cand;
            taken[static_cast<std::size_t>(cand)] = 1;
            if (self(self, step + 1)) return true;
            img[static_cast<std::size_t>(v)] = -1;
            taken[static_cast<std::size_t>(cand)] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace specturan
