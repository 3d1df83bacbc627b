#pragma once

// Linear maps M_n -> M_n as n^2 x n^2 matrices.
//
// Index convention: row (i,j) and column (k,l) flatten to i*n + j and k*n + l,
// so vec(|k><l|) = |k> ⊗ |l> and
//
//     apply(T, x)_{ij} = sum_{k,l} T[(i,j),(k,l)] x_{kl}.
//
// Under this convention realign(identity) is x -> Tr(x) I, the swap tensor is
// x -> x^T, and x -> u x u^dagger is the matrix u ⊗ conj(u).

#include <cstddef>

#include "qgw/numlin.hpp"

namespace qgw {

class SuperOp {
public:
    SuperOp() = default;
    /// Throws InputError unless `tensor` is n^2 x n^2 with finite entries.
    SuperOp(std::size_t n, CMatrix tensor);

    static SuperOp zero(std::size_t n);
    static SuperOp identity(std::size_t n);
    /// x -> x^T
    static SuperOp swap(std::size_t n);
    /// x -> Tr(x) I, i.e. the unnormalized Omega Omega^dagger with Omega = vec(I).
    static SuperOp trace_map(std::size_t n);
    /// x -> p x
    static SuperOp left_multiplication(const CMatrix& p);
    /// x -> u x u^dagger
    static SuperOp conjugation(const CMatrix& u);

    std::size_t n() const { return n_; }
    std::size_t side() const { return n_ * n_; }
    const CMatrix& matrix() const { return tensor_; }

    cplx operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return tensor_(index(i, j), index(k, l));
    }
    Eigen::Index index(std::size_t i, std::size_t j) const { return static_cast<Eigen::Index>(i * n_ + j); }

    SuperOp operator+(const SuperOp& o) const;
    SuperOp operator-(const SuperOp& o) const;
    SuperOp operator*(const SuperOp& o) const;  // composition
    SuperOp scaled(cplx s) const;

private:
    std::size_t n_ = 0;
    CMatrix tensor_;
};

/// Row-major vectorization: vec(x)[i*n + j] = x_{ij}.
CVector vec(const CMatrix& x);
CMatrix unvec(const CVector& v, std::size_t n);

/// Swap of the bottom-right and top-left legs: R[(i,j),(k,l)] = T[(l,j),(k,i)].
SuperOp realign(const SuperOp& t);

CMatrix apply(const SuperOp& t, const CMatrix& x);

/// Normalized Schur product on M_n:
/// (F ⋆ G)[(i,j),(k,l)] = (1/n) sum_{p,q} F[(i,p),(k,q)] G[(p,j),(q,l)].
SuperOp schur_product(const SuperOp& f, const SuperOp& g);

SuperOp conjugate(const SuperOp& t);

/// Transpose of the n^2 x n^2 representation.
SuperOp transpose_map(const SuperOp& t);

/// Dagger-Frobenius structure of C^n or M_n as concrete matrices on the
/// underlying Hilbert space (dimension d = n or n^2):
/// mult: d x d^2, comult = mult^dagger, unit: d x 1, counit = unit^dagger.
struct FrobeniusData {
    std::size_t n = 0;
    std::size_t dim = 0;
    CMatrix mult;
    CMatrix comult;
    CMatrix unit;
    CMatrix counit;

    /// comult * unit, the duality morphism C -> X ⊗ X.
    CMatrix cup() const { return comult * unit; }
    CMatrix cap() const { return cup().adjoint(); }
};

/// C^n with componentwise multiplication; special (m m^dagger = id).
FrobeniusData classical_frobenius(std::size_t n);

/// M_n with matrix multiplication and unit I, unnormalized (m m^dagger = n id).
FrobeniusData matrix_frobenius(std::size_t n);

/// Transpose of an arbitrary map X -> X via (cap ⊗ id)(id ⊗ f ⊗ id)(id ⊗ cup).
CMatrix frobenius_transpose(const FrobeniusData& fd, const CMatrix& f);

}  // namespace qgw
