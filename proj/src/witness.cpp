#include "qgw/witness.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

namespace qgw {

namespace {

Eigen::Index ei(std::size_t v) { return static_cast<Eigen::Index>(v); }

void require_size(const CMatrix& m, std::size_t n, const char* what) {
    if (m.rows() != ei(n) || m.cols() != ei(n))
        throw InputError(std::string(what) + ": expected " + std::to_string(n) + "x" + std::to_string(n) +
                         " matrices, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_budget(const QuantumGraph& g, const char* what) {
    if (g.n() > kCoordinateSearchMaxN)
        throw BudgetError(std::string(what) + ": coordinate search limited to n <= " +
                          std::to_string(kCoordinateSearchMaxN));
}

double pi_diag(const QuantumGraph& g, std::size_t i, std::size_t j) {
    const auto idx = ei(i * g.n() + j);
    return g.projector().matrix()(idx, idx).real();
}

}  // namespace

void require_projector_partition(const std::vector<CMatrix>& ps, std::size_t n, Tolerance tol, const char* what) {
    if (ps.empty()) throw InputError(std::string(what) + ": witness has no projectors");
    CMatrix sum = CMatrix::Zero(ei(n), ei(n));
    for (std::size_t s = 0; s < ps.size(); ++s) {
        require_size(ps[s], n, what);
        if (!is_projector(ps[s], tol))
            throw InputError(std::string(what) + ": entry " + std::to_string(s) + " is not a projector");
        if (max_abs(ps[s]) <= tol.eps())
            throw InputError(std::string(what) + ": entry " + std::to_string(s) + " is zero");
        sum += ps[s];
    }
    if (max_abs(sum - CMatrix::Identity(ei(n), ei(n))) > tol.eps())
        throw InputError(std::string(what) + ": projectors do not sum to the identity");
}

bool check_components(const QuantumGraph& g, const ComponentWitness& w, Tolerance tol) {
    const std::size_t n = g.n();
    require_projector_partition(w.projectors, n, tol, "component witness");
    const CMatrix adj = g.adjacency().matrix();
    const CMatrix id = CMatrix::Identity(ei(n), ei(n));
    std::vector<CMatrix> left;
    left.reserve(w.projectors.size());
    for (const auto& p : w.projectors) left.push_back(kron(p, id));
    for (std::size_t t = 0; t < left.size(); ++t) {
        const CMatrix gt = adj * left[t];
        for (std::size_t s = 0; s < left.size(); ++s)
            if (s != t && max_abs(left[s] * gt) > tol.eps()) return false;
    }
    return true;
}

bool check_colouring(const QuantumGraph& g, const ColouringWitness& w, Tolerance tol) {
    require_projector_partition(w.projectors, g.n(), tol, "colouring witness");
    for (const auto& p : w.projectors)
        for (const auto& b : g.basis())
            if (max_abs(p * b * p) > tol.eps()) return false;
    return true;
}

bool check_independent_set(const QuantumGraph& g, const IndependenceWitness& w, Tolerance tol) {
    require_size(w.P, g.n(), "independence witness");
    if (!is_projector(w.P, tol)) throw InputError("independence witness: not a projector");
    const cplx rk = w.P.trace();
    if (std::abs(rk) < 0.5) throw InputError("independence witness: projector has rank 0");
    for (const auto& b : g.basis()) {
        const CMatrix m = w.P * b * w.P;
        const cplx lambda = (w.P * m).trace() / rk;
        if (max_abs(m - lambda * w.P) > tol.eps()) return false;
    }
    return true;
}

CliqueCriteria clique_criteria(const QuantumGraph& g, const CliqueWitness& w, Tolerance tol) {
    const std::size_t n = g.n();
    const CMatrix& v = w.V;
    if (v.rows() != ei(n)) throw InputError("clique witness: isometry has the wrong number of rows");
    const std::size_t k = w.k();
    if (k == 0) throw InputError("clique witness: k must be positive");
    if (!is_isometry(v, tol)) throw InputError("clique witness: V is not an isometry");
    CliqueCriteria out;

    CMatrix span(ei(k * k), ei(g.dim() + 1));
    for (std::size_t c = 0; c < g.dim(); ++c) span.col(ei(c)) = vec(v.adjoint() * g.basis()[c] * v);
    span.col(ei(g.dim())) = vec(CMatrix::Identity(ei(k), ei(k)));
    out.span_criterion = rank(span, tol) == k * k;

    if (k == 1) {
        out.injectivity_criterion = true;
        return out;
    }
    std::vector<CMatrix> traceless;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b && a == 0) continue;
            CMatrix y = CMatrix::Zero(ei(k), ei(k));
            y(ei(a), ei(b)) = 1.0;
            if (a == b) y(0, 0) = -1.0;
            traceless.push_back(std::move(y));
        }
    CMatrix image(ei(n * n), ei(traceless.size()));
    for (std::size_t c = 0; c < traceless.size(); ++c)
        image.col(ei(c)) = g.projector().matrix() * vec(v * traceless[c] * v.adjoint());
    out.injectivity_criterion = rank(image, tol) == k * k - 1;
    return out;
}

bool check_clique(const QuantumGraph& g, const CliqueWitness& w, Tolerance tol) {
    const CliqueCriteria c = clique_criteria(g, w, tol);
    if (c.span_criterion != c.injectivity_criterion)
        throw InternalError("check_clique: span and injectivity criteria disagree");
    return c.span_criterion;
}

CMatrix coordinate_projector(std::size_t n, const std::vector<std::size_t>& s) {
    CMatrix p = CMatrix::Zero(ei(n), ei(n));
    for (auto i : s) {
        if (i >= n) throw InputError("coordinate_projector: index out of range");
        p(ei(i), ei(i)) = 1.0;
    }
    return p;
}

ComponentWitness search_coordinate_components(const QuantumGraph& g, std::size_t max_parts, Tolerance tol) {
    require_budget(g, "search_coordinate_components");
    if (max_parts == 0) throw InputError("search_coordinate_components: max_parts must be positive");
    const std::size_t n = g.n();
    const CMatrix adj = g.adjacency().matrix();
    // A coordinate partition passes iff no adjacency block G[(i,.),(j,.)] links two parts,
    // so the finest passing partition is the set of linked classes.
    ClassicalGraph linked(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && max_abs(adj.block(ei(i * n), ei(j * n), ei(n), ei(n))) > tol.eps()) linked.add_edge(i, j);
    Partition parts = components(linked);
    while (parts.size() > max_parts) {
        auto& into = parts[max_parts - 1];
        into.insert(into.end(), parts.back().begin(), parts.back().end());
        std::sort(into.begin(), into.end());
        parts.pop_back();
    }
    ComponentWitness w;
    for (const auto& p : parts) w.projectors.push_back(coordinate_projector(n, p));
    if (!check_components(g, w, tol)) throw InternalError("search_coordinate_components: linked classes rejected");
    return w;
}

std::optional<ColouringWitness> search_coordinate_colouring(const QuantumGraph& g, std::size_t k, Tolerance tol) {
    require_budget(g, "search_coordinate_colouring");
    const std::size_t n = g.n();
    for (std::size_t i = 0; i < n; ++i)
        if (pi_diag(g, i, i) > tol.eps()) return std::nullopt;
    // |i><j| is orthogonal to S iff the matching diagonal entry of the projector vanishes.
    ClassicalGraph conflict(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pi_diag(g, i, j) > tol.eps() || pi_diag(g, j, i) > tol.eps()) conflict.add_edge(i, j);
    const ColouringResult c = chromatic_number(conflict);
    if (c.chi > k) return std::nullopt;
    ColouringWitness w;
    for (const auto& cls : c.classes) w.projectors.push_back(coordinate_projector(n, cls));
    if (!check_colouring(g, w, tol)) throw InternalError("search_coordinate_colouring: conflict colouring rejected");
    return w;
}

std::optional<IndependenceWitness> search_coordinate_independent(const QuantumGraph& g, Tolerance tol) {
    require_budget(g, "search_coordinate_independent");
    const std::size_t n = g.n();
    if (n == 0) return std::nullopt;
    std::vector<std::uint32_t> forbidden(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (pi_diag(g, i, j) > tol.eps() || pi_diag(g, j, i) > tol.eps()))
                forbidden[i] |= std::uint32_t{1} << j;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if ((m >> i) & 1U) ok = (forbidden[i] & m) == 0;
        if (ok) masks.push_back(m);
    }
    auto members = [n](std::uint32_t m) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1U) s.push_back(i);
        return s;
    };
    std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
        return members(a) < members(b);
    });
    for (auto m : masks) {
        IndependenceWitness w{coordinate_projector(n, members(m))};
        if (check_independent_set(g, w, tol)) return w;
    }
    return std::nullopt;
}

std::optional<CliqueWitness> random_clique_search(const QuantumGraph& g, std::size_t k, std::size_t trials,
                                                  std::uint64_t seed, Tolerance tol) {
    const std::size_t n = g.n();
    if (k == 0 || k > n) throw InputError("random_clique_search: need 1 <= k <= n");
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        CliqueWitness w;
        if (t == 0)
            w.V = CMatrix::Identity(ei(n), ei(k));
        else
            w.V = random_isometry(n, k, rng());
        if (check_clique(g, w, tol)) return w;
    }
    return std::nullopt;
}

std::optional<Partition> coordinate_parts(const std::vector<CMatrix>& ps, Tolerance tol) {
    Partition parts;
    for (const auto& p : ps) {
        const CMatrix d = p.diagonal().asDiagonal();
        if (max_abs(p - d) > tol.eps()) return std::nullopt;
        std::vector<std::size_t> part;
        for (Eigen::Index i = 0; i < p.rows(); ++i) {
            const cplx v = p(i, i);
            if (std::abs(v - 1.0) <= tol.eps())
                part.push_back(static_cast<std::size_t>(i));
            else if (std::abs(v) > tol.eps())
                return std::nullopt;
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace qgw
