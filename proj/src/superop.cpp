#include "qgw/superop.hpp"

#include <string>

namespace qgw {

namespace {

Eigen::Index ei(std::size_t v) { return static_cast<Eigen::Index>(v); }

void require_same_n(const SuperOp& a, const SuperOp& b, const char* what) {
    if (a.n() != b.n())
        throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a.n()) + " vs " +
                         std::to_string(b.n()) + ")");
}

}  // namespace

SuperOp::SuperOp(std::size_t n, CMatrix tensor) : n_(n), tensor_(std::move(tensor)) {
    const auto side = ei(n * n);
    if (tensor_.rows() != side || tensor_.cols() != side)
        throw InputError("SuperOp: expected a " + std::to_string(side) + "x" + std::to_string(side) +
                         " tensor, got " + std::to_string(tensor_.rows()) + "x" + std::to_string(tensor_.cols()));
    require_finite(tensor_, "SuperOp");
}

SuperOp SuperOp::zero(std::size_t n) { return SuperOp(n, CMatrix::Zero(ei(n * n), ei(n * n))); }

SuperOp SuperOp::identity(std::size_t n) { return SuperOp(n, CMatrix::Identity(ei(n * n), ei(n * n))); }

SuperOp SuperOp::swap(std::size_t n) {
    CMatrix t = CMatrix::Zero(ei(n * n), ei(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(ei(i * n + j), ei(j * n + i)) = 1.0;
    return SuperOp(n, std::move(t));
}

SuperOp SuperOp::trace_map(std::size_t n) {
    CMatrix t = CMatrix::Zero(ei(n * n), ei(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) t(ei(i * n + i), ei(k * n + k)) = 1.0;
    return SuperOp(n, std::move(t));
}

SuperOp SuperOp::left_multiplication(const CMatrix& p) {
    require_square(p, "left_multiplication");
    const auto n = static_cast<std::size_t>(p.rows());
    return SuperOp(n, kron(p, CMatrix::Identity(p.rows(), p.rows())));
}

SuperOp SuperOp::conjugation(const CMatrix& u) {
    require_square(u, "conjugation");
    const auto n = static_cast<std::size_t>(u.rows());
    return SuperOp(n, kron(u, u.conjugate()));
}

SuperOp SuperOp::operator+(const SuperOp& o) const {
    require_same_n(*this, o, "SuperOp +");
    return SuperOp(n_, tensor_ + o.tensor_);
}

SuperOp SuperOp::operator-(const SuperOp& o) const {
    require_same_n(*this, o, "SuperOp -");
    return SuperOp(n_, tensor_ - o.tensor_);
}

SuperOp SuperOp::operator*(const SuperOp& o) const {
    require_same_n(*this, o, "SuperOp *");
    return SuperOp(n_, tensor_ * o.tensor_);
}

SuperOp SuperOp::scaled(cplx s) const { return SuperOp(n_, s * tensor_); }

CVector vec(const CMatrix& x) {
    CVector v(x.size());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
    return v;
}

CMatrix unvec(const CVector& v, std::size_t n) {
    if (v.size() != ei(n * n))
        throw InputError("unvec: expected length " + std::to_string(n * n) + ", got " + std::to_string(v.size()));
    CMatrix x(ei(n), ei(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(ei(i), ei(j)) = v(ei(i * n + j));
    return x;
}

SuperOp realign(const SuperOp& t) {
    const std::size_t n = t.n();
    CMatrix r(ei(n * n), ei(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) r(t.index(i, j), t.index(k, l)) = t(l, j, k, i);
    return SuperOp(n, std::move(r));
}

CMatrix apply(const SuperOp& t, const CMatrix& x) {
    if (x.rows() != ei(t.n()) || x.cols() != ei(t.n()))
        throw InputError("apply: expected a " + std::to_string(t.n()) + "x" + std::to_string(t.n()) + " matrix");
    return unvec(t.matrix() * vec(x), t.n());
}

SuperOp schur_product(const SuperOp& f, const SuperOp& g) {
    require_same_n(f, g, "schur_product");
    const std::size_t n = f.n();
    CMatrix out = CMatrix::Zero(ei(n * n), ei(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    cplx acc = 0.0;
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q) acc += f(i, p, k, q) * g(p, j, q, l);
                    out(f.index(i, j), f.index(k, l)) = acc / static_cast<double>(n);
                }
    return SuperOp(n, std::move(out));
}

SuperOp conjugate(const SuperOp& t) { return SuperOp(t.n(), t.matrix().conjugate()); }

SuperOp transpose_map(const SuperOp& t) { return SuperOp(t.n(), t.matrix().transpose()); }

FrobeniusData classical_frobenius(std::size_t n) {
    if (n == 0) throw InputError("classical_frobenius: n must be positive");
    FrobeniusData fd;
    fd.n = n;
    fd.dim = n;
    fd.mult = CMatrix::Zero(ei(n), ei(n * n));
    for (std::size_t i = 0; i < n; ++i) fd.mult(ei(i), ei(i * n + i)) = 1.0;
    fd.comult = fd.mult.adjoint();
    fd.unit = CMatrix::Ones(ei(n), 1);
    fd.counit = fd.unit.adjoint();
    return fd;
}

FrobeniusData matrix_frobenius(std::size_t n) {
    if (n == 0) throw InputError("matrix_frobenius: n must be positive");
    const std::size_t d = n * n;
    FrobeniusData fd;
    fd.n = n;
    fd.dim = d;
    fd.mult = CMatrix::Zero(ei(d), ei(d * d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t j = 0; j < n; ++j) fd.mult(ei(i * n + j), ei((i * n + p) * d + (p * n + j))) = 1.0;
    fd.comult = fd.mult.adjoint();
    fd.unit = vec(CMatrix::Identity(ei(n), ei(n)));
    fd.counit = fd.unit.adjoint();
    return fd;
}

CMatrix frobenius_transpose(const FrobeniusData& fd, const CMatrix& f) {
    const auto d = ei(fd.dim);
    if (f.rows() != d || f.cols() != d)
        throw InputError("frobenius_transpose: expected a " + std::to_string(d) + "x" + std::to_string(d) + " map");
    const CMatrix id = CMatrix::Identity(d, d);
    const CMatrix bend_in = kron(id, fd.cup());
    const CMatrix middle = kron(kron(id, f), id);
    const CMatrix bend_out = kron(fd.cap(), id);
    return bend_out * middle * bend_in;
}

}  // namespace qgw
