#pragma once

// Undirected simple graphs on 0-indexed vertices, adjacency kept as bit rows.
// Dense-friendly: one cache line covers 512 potential neighbours, so matvecs,
// common-neighbour counts and triangle counts run on popcounts instead of
// pointer chasing.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace specturan {

using VertexList = std::vector<int>;
using EdgeList = std::vector<std::pair<int, int>>;

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
        if (n > kMaxOrder) throw std::invalid_argument("Graph: order exceeds limit");
        words_ = (static_cast<std::size_t>(n) + 63) / 64;
        rows_.assign(static_cast<std::size_t>(n) * words_, 0);
    }

    Graph(int n, const EdgeList& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    static constexpr int kMaxOrder = 20000;

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("add_edge: loop rejected");
        bool already = (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
        row(u)[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
        row(v)[static_cast<std::size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
        if (!already) ++m_;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return;
        bool present = (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
        row(u)[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
        row(v)[static_cast<std::size_t>(u) / 64] &= ~(std::uint64_t{1} << (u % 64));
        if (present) --m_;
    }

    long long edge_count() const { return m_; }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
        return d;
    }

    int max_degree() const {
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
        return best;
    }

    VertexList neighbors(int v) const {
        check_vertex(v);
        VertexList out;
        out.reserve(16);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = row(v)[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(static_cast<int>(w * 64) + b);
                bits &= bits - 1;
            }
        }
        return out;
    }

    EdgeList edges() const {
        EdgeList out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Raw row access for the numeric kernels; words beyond bit n-1 are zero.
    const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
    std::size_t words_per_row() const { return words_; }

    int common_neighbor_count(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        int c = 0;
        const std::uint64_t* a = row(u);
        const std::uint64_t* b = row(v);
        for (std::size_t w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
        return c;
    }

    // New graph on the listed vertices, order inherited from the list.
    Graph induced_subgraph(const VertexList& vs) const {
        std::unordered_set<int> distinct(vs.begin(), vs.end());
        if (distinct.size() != vs.size()) throw std::invalid_argument("induced_subgraph: repeated vertex");
        Graph h(static_cast<int>(vs.size()));
        for (std::size_t i = 0; i < vs.size(); ++i) {
            check_vertex(vs[i]);
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (has_edge(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
        return h;
    }

    // Vertex v dropped, higher labels shifted down by one.
    Graph without_vertex(int v) const {
        check_vertex(v);
        VertexList keep;
        keep.reserve(static_cast<std::size_t>(n_) - 1);
        for (int u = 0; u < n_; ++u)
            if (u != v) keep.push_back(u);
        return induced_subgraph(keep);
    }

    Graph with_new_vertex(const VertexList& attach = {}) const {
        Graph h(n_ + 1);
        for (auto [u, v] : edges()) h.add_edge(u, v);
        for (int u : attach) h.add_edge(u, n_);
        return h;
    }

    // perm[old] = new label.
    Graph relabeled(const VertexList& perm) const {
        if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabeled: size mismatch");
        Graph h(n_);
        for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
        return h;
    }

    long long edges_within(const VertexList& s) const {
        long long c = 0;
        std::vector<char> in(static_cast<std::size_t>(n_), 0);
        for (int v : s) {
            check_vertex(v);
            in[static_cast<std::size_t>(v)] = 1;
        }
        for (int v : s)
            for (int u : neighbors(v))
                if (u > v && in[static_cast<std::size_t>(u)]) ++c;
        return c;
    }

    long long cut_edges(const VertexList& s, const VertexList& t) const {
        std::vector<char> side(static_cast<std::size_t>(n_), 0);
        for (int v : s) {
            check_vertex(v);
            side[static_cast<std::size_t>(v)] = 1;
        }
        long long c = 0;
        for (int v : t) {
            check_vertex(v);
            if (side[static_cast<std::size_t>(v)]) throw std::invalid_argument("cut_edges: sides overlap");
            for (int u : neighbors(v))
                if (side[static_cast<std::size_t>(u)]) ++c;
        }
        return c;
    }

    std::vector<VertexList> components() const {
        std::vector<int> comp(static_cast<std::size_t>(n_), -1);
        std::vector<VertexList> out;
        VertexList stack;
        for (int s = 0; s < n_; ++s) {
            if (comp[static_cast<std::size_t>(s)] != -1) continue;
            int id = static_cast<int>(out.size());
            out.emplace_back();
            stack.push_back(s);
            comp[static_cast<std::size_t>(s)] = id;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                out[static_cast<std::size_t>(id)].push_back(v);
                for (int u : neighbors(v)) {
                    if (comp[static_cast<std::size_t>(u)] == -1) {
                        comp[static_cast<std::size_t>(u)] = id;
                        stack.push_back(u);
                    }
                }
            }
        }
        for (auto& c : out) std::sort(c.begin(), c.end());
        return out;
    }

    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : rows_) h = (h ^ w) * 0x100000001b3ULL;
        return h;
    }

private:
    std::uint64_t* row(int v) { return rows_.data() + static_cast<std::size_t>(v) * words_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
    }

    int n_ = 0;
    long long m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const { return g.hash(); }
};

// Inclusion-exclusion floor for |A_1 ∩ … ∩ A_p| given the sizes and the size
// of the union: sum |A_i| − (p−1)|∪A_i|. Valid for any realization.
inline long long common_intersection_lower_bound(const std::vector<long long>& sizes, long long union_size) {
    if (sizes.empty()) throw std::invalid_argument("common_intersection_lower_bound: no sets");
    for (long long s : sizes)
        if (s < 0 || s > union_size) throw std::invalid_argument("common_intersection_lower_bound: size outside [0, union]");
    long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    return total - (static_cast<long long>(sizes.size()) - 1) * union_size;
}

}  // namespace specturan
