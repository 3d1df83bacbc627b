#pragma once

// Reference implementations for the tests: direct formulas, brute force, no shortcuts.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <random>
#include <vector>

#include "qgw/abcgraphs.hpp"
#include "qgw/classical.hpp"
#include "qgw/numlin.hpp"
#include "qgw/superop.hpp"

namespace oracle {

using qgw::CMatrix;
using qgw::cplx;
using Adj = std::vector<std::vector<int>>;

inline Eigen::Index ei(std::size_t v) { return static_cast<Eigen::Index>(v); }

inline CMatrix unit(std::size_t n, std::size_t k, std::size_t l) {
    CMatrix e = CMatrix::Zero(ei(n), ei(n));
    e(ei(k), ei(l)) = 1.0;
    return e;
}

/// Matrix of a linear map on M_n: column (k,l) holds f(|k><l|) in row-major order.
inline CMatrix tensor_of(std::size_t n, const std::function<CMatrix(const CMatrix&)>& f) {
    CMatrix t(ei(n * n), ei(n * n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            const CMatrix y = f(unit(n, k, l));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) t(ei(i * n + j), ei(k * n + l)) = y(ei(i), ei(j));
        }
    return t;
}

/// x_ij -> Å_ij x_ij + δ_ij (B diag x)_i + C̊_ij x_ji, evaluated entry by entry.
inline CMatrix ldoi_apply(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& x) {
    const auto n = x.rows();
    CMatrix y = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) {
                for (Eigen::Index k = 0; k < n; ++k) y(i, i) += b(i, k) * x(k, k);
            } else {
                y(i, j) = a(i, j) * x(i, j) + c(i, j) * x(j, i);
            }
        }
    return y;
}

inline CMatrix ldoi_tensor(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
    return tensor_of(static_cast<std::size_t>(a.rows()), [&](const CMatrix& x) { return ldoi_apply(a, b, c, x); });
}

inline CMatrix realign(const CMatrix& t, std::size_t n) {
    CMatrix r(t.rows(), t.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) r(ei(i * n + j), ei(k * n + l)) = t(ei(l * n + j), ei(k * n + i));
    return r;
}

/// Multiplication of M_n as a map C^{n^2} ⊗ C^{n^2} -> C^{n^2}.
inline CMatrix matrix_mult(std::size_t n) {
    const std::size_t d = n * n;
    CMatrix m = CMatrix::Zero(ei(d), ei(d * d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t j = 0; j < n; ++j) m(ei(i * n + j), ei((i * n + p) * d + (p * n + j))) = 1.0;
    return m;
}

/// Diagrammatic Schur product (1/n) m (F ⊗ G) m^dagger.
inline CMatrix schur(const CMatrix& f, const CMatrix& g, std::size_t n) {
    const CMatrix m = matrix_mult(n);
    return m * qgw::kron(f, g) * m.adjoint() / static_cast<double>(n);
}

/// Counting diagram u^dagger (n Π^R) u with u = sqrt(n) vec(I).
inline double diagram_edge_count(const CMatrix& pi, std::size_t n) {
    qgw::CVector u = qgw::CVector::Zero(ei(n * n));
    for (std::size_t i = 0; i < n; ++i) u(ei(i * n + i)) = std::sqrt(static_cast<double>(n));
    const CMatrix g = realign(pi, n) * static_cast<double>(n);
    return (u.adjoint() * g * u)(0, 0).real();
}

inline double projector_defect(const CMatrix& m) {
    return std::max(qgw::max_abs(m * m - m), qgw::max_abs(m.adjoint() - m));
}

// -- classical brute force ------------------------------------------------

inline Adj adjacency(const qgw::ClassicalGraph& g) {
    Adj a(g.n(), std::vector<int>(g.n(), 0));
    for (std::size_t i = 0; i < g.n(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j) a[i][j] = g.has_edge(i, j) ? 1 : 0;
    return a;
}

inline Adj random_adjacency(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Adj a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a[i][j] = a[j][i] = coin(rng) ? 1 : 0;
    return a;
}

inline qgw::ClassicalGraph to_graph(const Adj& a) { return qgw::ClassicalGraph::from_adjacency(a); }

inline std::size_t popcount(std::size_t m) { return static_cast<std::size_t>(__builtin_popcountll(m)); }

inline bool independent_mask(const Adj& a, std::size_t m) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (((m >> i) & 1) && ((m >> j) & 1) && a[i][j]) return false;
    return true;
}

inline bool clique_mask(const Adj& a, std::size_t m) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (((m >> i) & 1) && ((m >> j) & 1) && !a[i][j]) return false;
    return true;
}

inline std::size_t independence(const Adj& a) {
    std::size_t best = 0;
    for (std::size_t m = 0; m < (std::size_t{1} << a.size()); ++m)
        if (independent_mask(a, m)) best = std::max(best, popcount(m));
    return best;
}

inline std::size_t clique(const Adj& a) {
    std::size_t best = 0;
    for (std::size_t m = 0; m < (std::size_t{1} << a.size()); ++m)
        if (clique_mask(a, m)) best = std::max(best, popcount(m));
    return best;
}

inline std::size_t min_vertex_cover(const Adj& a) {
    std::size_t best = a.size();
    for (std::size_t m = 0; m < (std::size_t{1} << a.size()); ++m) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            for (std::size_t j = i + 1; j < a.size() && ok; ++j)
                if (a[i][j] && !((m >> i) & 1) && !((m >> j) & 1)) ok = false;
        if (ok) best = std::min(best, popcount(m));
    }
    return best;
}

/// Smallest k admitting a proper k-colouring, by trying every assignment.
inline std::size_t chromatic(const Adj& a) {
    const std::size_t n = a.size();
    if (n == 0) return 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> c(n, 0);
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = i + 1; j < n && ok; ++j)
                    if (a[i][j] && c[i] == c[j]) ok = false;
            if (ok) return k;
            std::size_t pos = 0;
            while (pos < n && ++c[pos] == k) c[pos++] = 0;
            if (pos == n) break;
        }
    }
    return n;
}

inline std::size_t component_count(const Adj& a) {
    const std::size_t n = a.size();
    std::vector<int> seen(n, 0);
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            for (std::size_t w = 0; w < n; ++w)
                if (a[v][w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    }
    return count;
}

// -- instances ------------------------------------------------------------

/// X_{A,B} with A the classical graph a and B a random real projector annihilating 1.
inline qgw::AbcParams random_xab(const Adj& a, std::size_t b_rank, std::uint64_t seed) {
    const std::size_t n = a.size();
    qgw::AbcParams b = qgw::random_abc(n, seed, qgw::RandomProfile{0.0, 0.0, b_rank, true});
    qgw::StrangeGraph sg(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j]) sg.add_classical(i, j);
    return qgw::from_strange_graph(sg, b.B);
}

}  // namespace oracle
