#pragma once

// Canonical labeling for small graphs (n <= 16) by colour refinement plus
// individualization. The canonical form is the labeling that maximizes the
// column-packed upper-triangle bit string, the same bit order graph6 uses,
// so canonical graph6 lines compare as strings.
//
// Branching explores only the first non-singleton colour cell, skips twin
// vertices (swapping twins is an automorphism), and prunes subtrees whose
// fixed key prefix already falls below the best leaf.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "graph.hpp"
#include "graph6.hpp"

namespace specturan {

struct CanonResult {
    Graph canon;          // relabeled representative
    VertexList perm;      // perm[old] = canonical position
};

namespace detail {

constexpr int kCanonMaxOrder = 16;

struct Canonizer {
    const Graph& g;
    int n;
    std::array<std::uint32_t, kCanonMaxOrder> adj{};  // one-word rows
    std::array<std::uint64_t, 2> best_key{};
    int best_bits = -1;  // -1 until the first leaf lands
    std::array<int, kCanonMaxOrder> best_order{};

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.order()) {
        for (int v = 0; v < n; ++v) {
            std::uint32_t bits = 0;
            for (int u : g.neighbors(v)) bits |= (1u << u);
            adj[static_cast<std::size_t>(v)] = bits;
        }
    }

    using Colors = std::array<int, kCanonMaxOrder>;

    // Order-preserving compression of colour values to ranks 0..k-1, so they
    // stay valid indices into the per-vertex count tables.
    void compress(Colors& col) const {
        std::array<int, kCanonMaxOrder> vals;
        for (int v = 0; v < n; ++v) vals[static_cast<std::size_t>(v)] = col[static_cast<std::size_t>(v)];
        std::sort(vals.begin(), vals.begin() + n);
        int* end = std::unique(vals.begin(), vals.begin() + n);
        for (int v = 0; v < n; ++v)
            col[static_cast<std::size_t>(v)] =
                static_cast<int>(std::lower_bound(vals.begin(), end, col[static_cast<std::size_t>(v)]) - vals.begin());
    }

    // Stable 1-dimensional refinement; colours are canonical ranks.
    void refine(Colors& col) const {
        compress(col);
        std::array<std::array<int, kCanonMaxOrder>, kCanonMaxOrder> cnt;
        while (true) {
            int ncol = 0;
            for (int v = 0; v < n; ++v) ncol = std::max(ncol, col[static_cast<std::size_t>(v)] + 1);
            for (int v = 0; v < n; ++v) {
                auto& c = cnt[static_cast<std::size_t>(v)];
                c.fill(0);
                std::uint32_t bits = adj[static_cast<std::size_t>(v)];
                while (bits) {
                    int u = std::countr_zero(bits);
                    bits &= bits - 1;
                    ++c[static_cast<std::size_t>(col[static_cast<std::size_t>(u)])];
                }
            }
            // New colour = rank of (old colour, neighbour-colour counts).
            std::array<int, kCanonMaxOrder> idx;
            for (int v = 0; v < n; ++v) idx[static_cast<std::size_t>(v)] = v;
            auto less = [&](int a, int b) {
                if (col[static_cast<std::size_t>(a)] != col[static_cast<std::size_t>(b)])
                    return col[static_cast<std::size_t>(a)] < col[static_cast<std::size_t>(b)];
                for (int c = 0; c < ncol; ++c) {
                    int da = cnt[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
                    int db = cnt[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
                    if (da != db) return da < db;
                }
                return false;
            };
            auto equal = [&](int a, int b) { return !less(a, b) && !less(b, a); };
            std::sort(idx.begin(), idx.begin() + n, less);
            Colors next{};
            int rank = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && !equal(idx[static_cast<std::size_t>(i - 1)], idx[static_cast<std::size_t>(i)])) ++rank;
                next[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = rank;
            }
            bool changed = false;
            for (int v = 0; v < n; ++v)
                if (next[static_cast<std::size_t>(v)] != col[static_cast<std::size_t>(v)]) changed = true;
            if (!changed) return;
            col = next;
        }
    }

    // Upper-triangle bits, column-packed, for the first t placed positions.
    // ord[pos] = vertex. Returns bit count (t*(t-1)/2).
    int prefix_key(const std::array<int, kCanonMaxOrder>& ord, int t, std::array<std::uint64_t, 2>& key) const {
        key = {0, 0};
        int bits = 0;
        for (int v = 1; v < t; ++v) {
            std::uint32_t row = adj[static_cast<std::size_t>(ord[static_cast<std::size_t>(v)])];
            for (int u = 0; u < v; ++u) {
                if ((row >> ord[static_cast<std::size_t>(u)]) & 1u)
                    key[static_cast<std::size_t>(bits / 64)] |= std::uint64_t{1} << (63 - bits % 64);
                ++bits;
            }
        }
        return bits;
    }

    // Lexicographic bit-prefix comparison: -1 below best, 0 tie, +1 above.
    int compare_prefix(const std::array<std::uint64_t, 2>& key, int bits) const {
        if (best_bits < 0) return 1;
        for (int w = 0; w * 64 < bits; ++w) {
            int take = std::min(64, bits - w * 64);
            std::uint64_t mask = take == 64 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (64 - take);
            std::uint64_t a = key[static_cast<std::size_t>(w)] & mask;
            std::uint64_t b = best_key[static_cast<std::size_t>(w)] & mask;
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    void search(Colors col) {
        refine(col);

        // Cells in colour order; positions fix along the initial singleton run.
        std::array<int, kCanonMaxOrder> ord;
        std::array<int, kCanonMaxOrder> cell_size{};
        for (int v = 0; v < n; ++v) {
            ord[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])] = v;  // valid for singleton colours
            ++cell_size[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])];
        }
        int run = 0;
        while (run < n && cell_size[static_cast<std::size_t>(run)] == 1) ++run;

        // The first `run` positions never change further down, so the packed
        // prefix only grows along a branch; compare against the live best.
        std::array<std::uint64_t, 2> key;
        int bits = prefix_key(ord, run, key);
        int c = compare_prefix(key, bits);
        if (c < 0) return;

        if (run == n) {  // discrete colouring: a leaf
            if (c > 0) {
                best_key = key;
                best_bits = bits;
                best_order = ord;
            }
            return;
        }

        // Branch on the first non-singleton cell, one twin per equivalence.
        int target = run;  // colour index of the cell
        VertexList cell;
        for (int v = 0; v < n; ++v)
            if (col[static_cast<std::size_t>(v)] == target) cell.push_back(v);
        VertexList tried;
        for (int u : cell) {
            bool twin = false;
            for (int w : tried) {
                std::uint32_t mask = ~((1u << u) | (1u << w));
                if ((adj[static_cast<std::size_t>(u)] & mask) == (adj[static_cast<std::size_t>(w)] & mask)) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried.push_back(u);
            Colors next{};
            for (int v = 0; v < n; ++v) next[static_cast<std::size_t>(v)] = col[static_cast<std::size_t>(v)] * 2 + 1;
            next[static_cast<std::size_t>(u)] -= 1;
            search(next);
        }
    }

    CanonResult run(const std::vector<int>* initial_colors) {
        if (n == 0) return {Graph(0), {}};
        Colors col{};
        if (initial_colors) {
            // Normalize the given colours to ranks.
            std::vector<int> sorted(*initial_colors);
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (int v = 0; v < n; ++v) {
                auto it = std::lower_bound(sorted.begin(), sorted.end(), (*initial_colors)[static_cast<std::size_t>(v)]);
                col[static_cast<std::size_t>(v)] = static_cast<int>(it - sorted.begin());
            }
        }
        search(col);
        CanonResult res;
        res.perm.assign(static_cast<std::size_t>(n), 0);
        for (int pos = 0; pos < n; ++pos) res.perm[static_cast<std::size_t>(best_order[static_cast<std::size_t>(pos)])] = pos;
        res.canon = g.relabeled(res.perm);
        return res;
    }
};

}  // namespace detail

// Canonical labeling; optional colours constrain the map (vertices may only
// go to positions of equal colour class). Colour values themselves are part
// of the invariant, so (G, mark u) and (G, mark w) compare equal iff some
// automorphism of G maps u to w.
inline CanonResult canonical_labeling(const Graph& g, const std::vector<int>* colors = nullptr) {
    if (g.order() > detail::kCanonMaxOrder)
        throw std::invalid_argument("canonical_labeling: order exceeds canonical-form limit (16)");
    if (colors && static_cast<int>(colors->size()) != g.order())
        throw std::invalid_argument("canonical_labeling: colour vector size mismatch");
    detail::Canonizer c(g);
    return c.run(colors);
}

inline Graph canonical_form(const Graph& g) { return canonical_labeling(g).canon; }

inline std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

// True iff some automorphism maps u to w: compare canonical forms with one
// vertex marked. Colour classes must match for equality to be possible, and
// the canonical key of a relabeled marked graph is marking-invariant.
inline bool same_orbit(const Graph& g, int u, int w) {
    if (u == w) return true;
    if (g.degree(u) != g.degree(w)) return false;
    std::vector<int> cu(static_cast<std::size_t>(g.order()), 1);
    std::vector<int> cw(static_cast<std::size_t>(g.order()), 1);
    cu[static_cast<std::size_t>(u)] = 0;
    cw[static_cast<std::size_t>(w)] = 0;
    Graph a = canonical_labeling(g, &cu).canon;
    Graph b = canonical_labeling(g, &cw).canon;
    return a == b;
}

}  // namespace specturan
