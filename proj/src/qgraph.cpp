#include "qgw/qgraph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace qgw {

namespace {

Eigen::Index ei(std::size_t v) { return static_cast<Eigen::Index>(v); }

std::vector<CMatrix> basis_of(const SuperOp& pi) {
    const CMatrix range = projector_range(pi.matrix());
    std::vector<CMatrix> out;
    out.reserve(static_cast<std::size_t>(range.cols()));
    for (Eigen::Index c = 0; c < range.cols(); ++c) out.push_back(unvec(range.col(c), pi.n()));
    return out;
}

SuperOp omega_projector(std::size_t n) {
    const CVector omega = vec(CMatrix::Identity(ei(n), ei(n)));
    return SuperOp(n, omega * omega.adjoint() / static_cast<double>(n));
}

}  // namespace

QuantumGraph QuantumGraph::from_projector(const SuperOp& pi, Tolerance tol) {
    const CMatrix& m = pi.matrix();
    const double idem = max_abs(m * m - m);
    const double herm = max_abs(m.adjoint() - m);
    if (idem > tol.eps() || herm > tol.eps()) {
        std::ostringstream os;
        os << "not a projector: |P^2 - P| = " << idem << ", |P^dagger - P| = " << herm;
        throw ValidationError(os.str());
    }
    return QuantumGraph(pi, basis_of(pi));
}

QuantumGraph QuantumGraph::from_span(std::size_t n, const std::vector<CMatrix>& generators, Tolerance tol) {
    const auto side = ei(n * n);
    if (generators.empty()) return from_projector(SuperOp::zero(n), tol);
    CMatrix cols(side, ei(generators.size()));
    for (std::size_t c = 0; c < generators.size(); ++c) {
        if (generators[c].rows() != ei(n) || generators[c].cols() != ei(n))
            throw InputError("from_span: generator " + std::to_string(c) + " has the wrong size");
        cols.col(ei(c)) = vec(generators[c]);
    }
    Eigen::BDCSVD<CMatrix> svd(cols, Eigen::ComputeThinU);
    const std::size_t r = rank(cols, tol);
    const CMatrix u = svd.matrixU().leftCols(ei(r));
    return from_projector(SuperOp(n, u * u.adjoint()), tol);
}

bool QuantumGraph::is_undirected(Tolerance tol) const {
    for (const auto& b : basis_) {
        const CVector v = vec(b.adjoint());
        if (max_abs(pi_.matrix() * v - v) > tol.eps()) return false;
    }
    return true;
}

bool QuantumGraph::is_loopless(Tolerance tol) const {
    const CVector omega = vec(CMatrix::Identity(ei(n()), ei(n())));
    return max_abs(pi_.matrix() * omega) <= tol.eps();
}

bool QuantumGraph::has_all_loops(Tolerance tol) const {
    const CVector omega = vec(CMatrix::Identity(ei(n()), ei(n())));
    return max_abs(pi_.matrix() * omega - omega) <= tol.eps();
}

QuantumGraph add_loops(const QuantumGraph& g, Tolerance tol) {
    if (!g.is_loopless(tol)) throw StateError("add_loops: graph already has loops");
    return QuantumGraph::from_projector(g.projector() + omega_projector(g.n()), tol);
}

QuantumGraph remove_loops(const QuantumGraph& g, Tolerance tol) {
    if (!g.has_all_loops(tol)) throw StateError("remove_loops: graph does not have all loops");
    return QuantumGraph::from_projector(g.projector() - omega_projector(g.n()), tol);
}

QuantumGraph disjoint_union(const QuantumGraph& g1, const QuantumGraph& g2) {
    const std::size_t k = g1.n();
    const std::size_t l = g2.n();
    const std::size_t n = k + l;
    const auto side = ei(n * n);
    CMatrix cols(side, ei(g1.dim() + g2.dim()));
    Eigen::Index c = 0;
    for (const auto& b : g1.basis()) {
        CMatrix x = CMatrix::Zero(ei(n), ei(n));
        x.topLeftCorner(ei(k), ei(k)) = b;
        cols.col(c++) = vec(x);
    }
    for (const auto& b : g2.basis()) {
        CMatrix x = CMatrix::Zero(ei(n), ei(n));
        x.bottomRightCorner(ei(l), ei(l)) = b;
        cols.col(c++) = vec(x);
    }
    return QuantumGraph::from_projector(SuperOp(n, cols * cols.adjoint()), Tolerance(1e-6));
}

double projector_distance(const QuantumGraph& g1, const QuantumGraph& g2) {
    if (g1.n() != g2.n()) throw InputError("projector_distance: dimension mismatch");
    return max_abs(g1.projector().matrix() - g2.projector().matrix());
}

double invariance_defect(const QuantumGraph& g, const CMatrix& u) {
    if (u.rows() != ei(g.n()) || u.cols() != ei(g.n())) throw InputError("invariance: unitary has the wrong size");
    const CMatrix uu = kron(u, u.conjugate());
    const CMatrix adj = g.adjacency().matrix();
    return max_abs(uu * adj - adj * uu);
}

bool check_group_invariance(const QuantumGraph& g, const std::vector<CMatrix>& unitaries, Tolerance tol) {
    for (std::size_t i = 0; i < unitaries.size(); ++i)
        if (!is_unitary(unitaries[i], Tolerance(std::max(tol.eps(), 1e-10))))
            throw InputError("check_group_invariance: matrix " + std::to_string(i) + " is not unitary");
    return std::all_of(unitaries.begin(), unitaries.end(),
                       [&](const CMatrix& u) { return invariance_defect(g, u) <= tol.eps(); });
}

SuperOp invariant_family(SymmetryGroup group, std::size_t n, double alpha, double beta, double gamma) {
    if (group == SymmetryGroup::U && gamma != 0.0)
        throw InputError("invariant_family: the transpose term is not U(n)-invariant");
    return SuperOp::identity(n).scaled(beta) + SuperOp::trace_map(n).scaled(alpha) + SuperOp::swap(n).scaled(gamma);
}

CMatrix signed_permutation(const std::vector<std::size_t>& perm, const std::vector<int>& signs) {
    const std::size_t n = perm.size();
    if (signs.size() != n) throw InputError("signed_permutation: size mismatch");
    std::vector<bool> seen(n, false);
    CMatrix p = CMatrix::Zero(ei(n), ei(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || seen[perm[i]]) throw InputError("signed_permutation: not a permutation");
        if (signs[i] != 1 && signs[i] != -1) throw InputError("signed_permutation: signs must be +1 or -1");
        seen[perm[i]] = true;
        p(ei(perm[i]), ei(i)) = static_cast<double>(signs[i]);
    }
    return p;
}

CMatrix random_signed_permutation(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution coin(0.5);
    std::vector<int> signs(n);
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    return signed_permutation(perm, signs);
}

CMatrix random_diagonal_unitary(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    CMatrix d = CMatrix::Zero(ei(n), ei(n));
    for (std::size_t i = 0; i < n; ++i) d(ei(i), ei(i)) = std::polar(1.0, phase(rng));
    return d;
}

CMatrix random_diagonal_signs(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    CMatrix d = CMatrix::Zero(ei(n), ei(n));
    for (std::size_t i = 0; i < n; ++i) d(ei(i), ei(i)) = coin(rng) ? 1.0 : -1.0;
    return d;
}

}  // namespace qgw
