#pragma once

// Dense complex linear algebra used throughout the library.

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "qgw/errors.hpp"

namespace qgw {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Numerical slack for every exact-in-theory predicate.
class Tolerance {
public:
    constexpr Tolerance() = default;
    explicit Tolerance(double eps) : eps_(eps) {
        if (!(eps > 0.0)) throw InputError("tolerance must be positive");
    }
    double eps() const { return eps_; }

private:
    double eps_ = 1e-8;
};

bool is_finite(const CMatrix& m);
void require_finite(const CMatrix& m, const char* what);
void require_square(const CMatrix& m, const char* what);

/// Largest entry modulus; 0 for empty matrices.
double max_abs(const CMatrix& m);

/// Singular values above eps * max(1, sigma_max).
std::size_t rank(const CMatrix& m, Tolerance tol = {});

bool is_projector(const CMatrix& m, Tolerance tol = {});
bool is_isometry(const CMatrix& v, Tolerance tol = {});
bool is_unitary(const CMatrix& u, Tolerance tol = {});

/// F^{-1/2} for Hermitian positive definite F, via eigendecomposition.
CMatrix inv_sqrt_psd(const CMatrix& f, Tolerance tol = {});

/// dim(col U ∩ col W) for matrices with orthonormal columns.
std::size_t subspace_intersection_dim(const CMatrix& u, const CMatrix& w, Tolerance tol = {});

/// Orthonormal basis for the eigenvalue-1 eigenspace of a projector (threshold 0.5).
CMatrix projector_range(const CMatrix& p);

/// Orthonormalized complex Gaussian columns; deterministic per seed.
CMatrix random_isometry(std::size_t n, std::size_t k, std::uint64_t seed);
CMatrix random_unitary(std::size_t n, std::uint64_t seed);
RMatrix random_orthogonal(std::size_t n, std::uint64_t seed);

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix all_ones(std::size_t n);
CVector ones_vector(std::size_t n);

}  // namespace qgw
