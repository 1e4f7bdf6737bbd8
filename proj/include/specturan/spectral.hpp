#pragma once

// Dominant-eigenvalue machinery on bit-row adjacency: power iteration for
// the adjacency spectral radius (shifted by +I so bipartite ±λ pairs cannot
// stall the iteration) and for the signless Laplacian D+A (nonnegative, no
// shift needed). The reported eigenvalue is the Rayleigh quotient of the
// final iterate; the residual is ‖Mv − λv‖∞ on the max-normalized vector,
// divided by max(1, |λ|) so the tolerance means the same at every scale.
//
// Disconnected input: each component is iterated separately and the best
// component's vector is reported (zeros elsewhere), so the residual bound
// still holds. Perron positivity is only promised on connected graphs.

#include <cmath>
#include <limits>

#include "detection.hpp"
#include "graph.hpp"

namespace specturan {

struct SpectralResult {
    double lambda = 0.0;
    std::vector<double> vector;  // max entry 1
    double residual = 0.0;
    long long iterations = 0;
    bool converged = true;
    bool connected = true;
};

namespace detail {

// y = A x restricted to the vertex set of g (labels are g-local).
inline void adjacency_matvec(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        double sum = 0.0;
        const std::uint64_t* row = g.row(v);
        for (std::size_t w = 0; w < g.words_per_row(); ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                sum += x[w * 64 + static_cast<std::size_t>(b)];
            }
        }
        y[static_cast<std::size_t>(v)] = sum;
    }
}

struct ComponentSpectral {
    double lambda = 0.0;
    std::vector<double> vec;
    double residual = 0.0;
    long long iterations = 0;
    bool converged = true;
};

// shift: added to the diagonal during iteration (1 for adjacency).
// diagonal: per-vertex extra diagonal (degrees for D+A), may be empty.
inline ComponentSpectral power_iterate(const Graph& g, double tol, long long cap, double shift, bool add_degrees) {
    const int n = g.order();
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    std::vector<double> ax(static_cast<std::size_t>(n), 0.0);
    std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
    if (add_degrees)
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    ComponentSpectral out;
    for (long long it = 1; it <= cap; ++it) {
        adjacency_matvec(g, x, ax);
        if (add_degrees)
            for (int v = 0; v < n; ++v) ax[static_cast<std::size_t>(v)] += deg[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
        // Rayleigh quotient of x for M = A (+D).
        double num = 0.0, den = 0.0;
        for (int v = 0; v < n; ++v) {
            num += x[static_cast<std::size_t>(v)] * ax[static_cast<std::size_t>(v)];
            den += x[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
        }
        double lam = num / den;
        // Scale-free residual: entries of Ax grow with λ, and so does the
        // floating-point noise floor of the matvec, so the raw infinity-norm
        // defect is measured against max(1, |λ|) before the tolerance test.
        double res = 0.0;
        double xmax = 0.0;
        for (int v = 0; v < n; ++v) xmax = std::max(xmax, std::abs(x[static_cast<std::size_t>(v)]));
        for (int v = 0; v < n; ++v)
            res = std::max(res, std::abs(ax[static_cast<std::size_t>(v)] - lam * x[static_cast<std::size_t>(v)]) / xmax);
        res /= std::max(1.0, std::abs(lam));
        out.iterations = it;
        if (res <= tol) {
            out.lambda = lam;
            out.residual = res;
            out.vec = x;
            for (double& e : out.vec) e /= xmax;
            return out;
        }
        out.lambda = lam;
        out.residual = res;
        // Next iterate under the shifted operator, max-normalized.
        double ymax = 0.0;
        for (int v = 0; v < n; ++v) {
            ax[static_cast<std::size_t>(v)] += shift * x[static_cast<std::size_t>(v)];
            ymax = std::max(ymax, std::abs(ax[static_cast<std::size_t>(v)]));
        }
        if (ymax == 0.0) {  // zero operator: eigenvalue 0, done
            out.lambda = 0.0;
            out.residual = 0.0;
            out.vec = x;
            return out;
        }
        for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = ax[static_cast<std::size_t>(v)] / ymax;
    }
    out.converged = false;
    double xmax = 0.0;
    for (double e : x) xmax = std::max(xmax, std::abs(e));
    out.vec = x;
    for (double& e : out.vec) e /= xmax;
    return out;
}

inline SpectralResult radius_by_components(const Graph& g, double tol, long long cap, double shift, bool add_degrees) {
    if (g.order() < 1) throw std::invalid_argument("spectral: empty graph");
    if (tol <= 0) throw std::invalid_argument("spectral: tolerance must be positive");
    auto comps = g.components();
    SpectralResult best;
    best.connected = comps.size() == 1;
    best.lambda = -std::numeric_limits<double>::infinity();
    std::vector<double> assembled(static_cast<std::size_t>(g.order()), 0.0);
    for (const auto& comp : comps) {
        Graph h = g.induced_subgraph(comp);
        ComponentSpectral r = power_iterate(h, tol, cap, shift, add_degrees);
        if (r.lambda > best.lambda) {
            best.lambda = r.lambda;
            best.residual = r.residual;
            best.iterations = r.iterations;
            best.converged = r.converged;
            std::fill(assembled.begin(), assembled.end(), 0.0);
            for (std::size_t i = 0; i < comp.size(); ++i)
                assembled[static_cast<std::size_t>(comp[i])] = r.vec[i];
        }
    }
    best.vector = assembled;
    return best;
}

}  // namespace detail

constexpr double kSpectralTol = 1e-10;
constexpr long long kSpectralIterationCap = 1000000;

inline SpectralResult spectral_radius(const Graph& g, double tol = kSpectralTol,
                                      long long cap = kSpectralIterationCap) {
    return detail::radius_by_components(g, tol, cap, 1.0, false);
}

inline SpectralResult signless_laplacian_radius(const Graph& g, double tol = kSpectralTol,
                                                long long cap = kSpectralIterationCap) {
    return detail::radius_by_components(g, tol, cap, 0.0, true);
}

inline double perron_entry_min(const SpectralResult& r) {
    if (!r.connected) throw std::invalid_argument("perron_entry_min: defined for connected graphs only");
    double lo = std::numeric_limits<double>::infinity();
    for (double e : r.vector) lo = std::min(lo, e);
    return lo;
}

inline double rayleigh_quotient(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.order()) throw std::invalid_argument("rayleigh_quotient: size mismatch");
    std::vector<double> ax(x.size(), 0.0);
    detail::adjacency_matvec(g, x, ax);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += x[i] * ax[i];
        den += x[i] * x[i];
    }
    if (den == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
    return num / den;
}

struct EdgeTriangleReport {
    double lhs = 0.0;  // e(G)
    double rhs = 0.0;  // λ² − 3t/λ
    double lambda = 0.0;
    long long triangles = 0;
    bool holds = true;
};

// e(G) >= λ² − 3t/λ for a graph with t triangles; trivial when λ = 0.
inline EdgeTriangleReport check_edge_triangle_bound(const Graph& g, double tol = 1e-6) {
    EdgeTriangleReport rep;
    rep.lhs = static_cast<double>(g.edge_count());
    rep.triangles = triangle_count(g);
    rep.lambda = spectral_radius(g).lambda;
    if (rep.lambda <= 0.0) {
        rep.rhs = -std::numeric_limits<double>::infinity();
        rep.holds = true;
        return rep;
    }
    rep.rhs = rep.lambda * rep.lambda - 3.0 * static_cast<double>(rep.triangles) / rep.lambda;
    rep.holds = rep.lhs >= rep.rhs - tol;
    return rep;
}

struct DegreeBoundsReport {
    double avg_deg = 0.0;
    double lambda = 0.0;
    int max_deg = 0;
    bool holds = true;
};

// Sandwich 2e/n <= λ <= Δ.
inline DegreeBoundsReport degree_bounds_check(const Graph& g, double tol = 1e-8) {
    DegreeBoundsReport rep;
    rep.avg_deg = 2.0 * static_cast<double>(g.edge_count()) / g.order();
    rep.lambda = spectral_radius(g).lambda;
    rep.max_deg = g.max_degree();
    rep.holds = rep.avg_deg <= rep.lambda + tol && rep.lambda <= rep.max_deg + tol;
    return rep;
}

}  // namespace specturan
