#include "qgw/numlin.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace qgw {

bool is_finite(const CMatrix& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
    return true;
}

void require_finite(const CMatrix& m, const char* what) {
    if (!is_finite(m)) throw InputError(std::string(what) + ": non-finite entry");
}

void require_square(const CMatrix& m, const char* what) {
    if (m.rows() != m.cols())
        throw InputError(std::string(what) + ": expected a square matrix, got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
}

double max_abs(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

std::size_t rank(const CMatrix& m, Tolerance tol) {
    require_finite(m, "rank");
    if (m.size() == 0) return 0;
    Eigen::BDCSVD<CMatrix> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    const double threshold = tol.eps() * std::max(1.0, s(0));
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > threshold) ++r;
    return r;
}

bool is_projector(const CMatrix& m, Tolerance tol) {
    require_square(m, "is_projector");
    require_finite(m, "is_projector");
    if (max_abs(m.adjoint() - m) > tol.eps()) return false;
    return max_abs(m * m - m) <= tol.eps();
}

bool is_isometry(const CMatrix& v, Tolerance tol) {
    if (v.rows() < v.cols())
        throw InputError("is_isometry: no isometry from C^" + std::to_string(v.cols()) + " into C^" +
                         std::to_string(v.rows()));
    require_finite(v, "is_isometry");
    const CMatrix gram = v.adjoint() * v;
    return max_abs(gram - CMatrix::Identity(v.cols(), v.cols())) <= tol.eps();
}

bool is_unitary(const CMatrix& u, Tolerance tol) {
    if (u.rows() != u.cols()) return false;
    return is_isometry(u, tol);
}

CMatrix inv_sqrt_psd(const CMatrix& f, Tolerance tol) {
    require_square(f, "inv_sqrt_psd");
    require_finite(f, "inv_sqrt_psd");
    if (max_abs(f - f.adjoint()) > tol.eps()) throw InputError("inv_sqrt_psd: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(f);
    const auto& ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev(i) <= tol.eps())
            throw SingularityError("inv_sqrt_psd: eigenvalue " + std::to_string(ev(i)) + " is not positive");
    const Eigen::VectorXd d = ev.cwiseSqrt().cwiseInverse();
    return es.eigenvectors() * d.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

std::size_t subspace_intersection_dim(const CMatrix& u, const CMatrix& w, Tolerance tol) {
    if (u.rows() != w.rows()) throw InputError("subspace_intersection_dim: ambient dimensions differ");
    // Orthonormality is a precondition; 1e-6 leaves room for accumulated rounding in callers.
    const Tolerance ortho(std::max(tol.eps(), 1e-6));
    if ((u.cols() > 0 && !is_isometry(u, ortho)) || (w.cols() > 0 && !is_isometry(w, ortho)))
        throw InputError("subspace_intersection_dim: columns are not orthonormal");
    CMatrix joined(u.rows(), u.cols() + w.cols());
    joined << u, w;
    return static_cast<std::size_t>(u.cols() + w.cols()) - rank(joined, tol);
}

CMatrix projector_range(const CMatrix& p) {
    require_square(p, "projector_range");
    const CMatrix h = 0.5 * (p + p.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const auto& ev = es.eigenvalues();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = ev.size() - 1; i >= 0; --i)
        if (ev(i) > 0.5) keep.push_back(i);
    CMatrix out(p.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
    return out;
}

namespace {

CMatrix gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index c = 0; c < g.cols(); ++c)
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = cplx(re, im) / std::sqrt(2.0);
        }
    return g;
}

// Q factor with the phase of diag(R) absorbed, so the result is Haar distributed.
template <typename Mat>
Mat haar_q(const Mat& g) {
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ() * Mat::Identity(g.rows(), g.cols());
    const Mat r = qr.matrixQR().topLeftCorner(g.cols(), g.cols()).template triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < g.cols(); ++i) {
        const auto d = r(i, i);
        if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
    }
    return q;
}

}  // namespace

CMatrix random_isometry(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k == 0 || k > n)
        throw InputError("random_isometry: need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    std::mt19937_64 rng(seed);
    return haar_q(gaussian(n, k, rng));
}

CMatrix random_unitary(std::size_t n, std::uint64_t seed) { return random_isometry(n, n, seed); }

RMatrix random_orthogonal(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InputError("random_orthogonal: n must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    RMatrix g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index c = 0; c < g.cols(); ++c)
        for (Eigen::Index r = 0; r < g.rows(); ++r) g(r, c) = normal(rng);
    return haar_q(g);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix all_ones(std::size_t n) {
    return CMatrix::Ones(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

CVector ones_vector(std::size_t n) { return CVector::Ones(static_cast<Eigen::Index>(n)); }

}  // namespace qgw
