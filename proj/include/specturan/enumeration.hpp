#pragma once

// Exhaustive generation of graph isomorphism classes by canonical
// augmentation: a child (parent plus one vertex) survives only when its new
// vertex lies in the automorphism orbit of the canonically chosen deletion
// vertex. Children of one parent are deduplicated locally by canonical form;
// no duplicates occur across parents, so disjoint parent sets can be walked
// by independent workers and the union is still duplicate-free.
//
// An optional keep-filter prunes the tree. It must be hereditary under
// vertex deletion (degree caps, matching caps, forbidden-subgraph freeness):
// the canonical parent of a kept graph is then kept as well, so the pruned
// tree stays connected and no kept class is missed.

#include <functional>
#include <string>
#include <thread>
#include <unordered_set>

#include "canonical.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace specturan {

using GraphFilter = std::function<bool(const Graph&)>;
using GraphVisitor = std::function<void(const Graph&)>;

namespace detail {

inline void augment(const Graph& parent, int target, const GraphVisitor& visit, const GraphFilter& keep) {
    const int m = parent.order();
    if (m == target) {
        visit(parent);
        return;
    }
    std::unordered_set<std::string> seen;
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Graph h = parent.with_new_vertex();
        for (std::uint64_t bits = mask; bits;) {
            int u = std::countr_zero(bits);
            bits &= bits - 1;
            h.add_edge(u, m);
        }
        if (keep && !keep(h)) continue;
        CanonResult res = canonical_labeling(h);
        int cd = -1;
        for (int v = 0; v <= m; ++v)
            if (res.perm[static_cast<std::size_t>(v)] == m) cd = v;
        if (cd != m && !same_orbit(h, m, cd)) continue;
        if (!seen.insert(to_graph6(res.canon)).second) continue;
        augment(res.canon, target, visit, keep);
    }
}

}  // namespace detail

// Visit one canonical representative per isomorphism class on exactly n
// vertices (kept classes only, when a filter is given). Deterministic order.
inline void enumerate_graphs(int n, const GraphVisitor& visit, const GraphFilter& keep = nullptr) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: order must be positive");
    if (n > detail::kCanonMaxOrder) throw std::invalid_argument("enumerate_graphs: order exceeds canonical-form limit");
    Graph k1(1);
    if (keep && !keep(k1)) return;
    detail::augment(k1, n, visit, keep);
}

inline long long count_graphs(int n, const GraphFilter& keep = nullptr) {
    long long c = 0;
    enumerate_graphs(n, [&](const Graph&) { ++c; }, keep);
    return c;
}

// Multi-worker variant. Parents at an internal level are dealt round-robin
// to workers; each worker augments its share independently. The visitor runs
// concurrently and receives the worker index; the set of visited classes is
// independent of the worker count.
inline void enumerate_graphs_parallel(int n, int threads,
                                      const std::function<void(const Graph&, int)>& visit,
                                      const GraphFilter& keep = nullptr) {
    if (threads <= 1 || n <= 4) {
        enumerate_graphs(n, [&](const Graph& g) { visit(g, 0); }, keep);
        return;
    }
    const int split = std::min(n - 1, 7);  // 1044 parents at level 7 spread well
    std::vector<Graph> parents;
    enumerate_graphs(split, [&](const Graph& g) { parents.push_back(g); }, keep);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = static_cast<std::size_t>(w); i < parents.size(); i += static_cast<std::size_t>(threads))
                detail::augment(parents[i], n, [&](const Graph& g) { visit(g, w); }, keep);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace specturan
