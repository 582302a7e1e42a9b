#pragma once

#include "opmean/matrix.hpp"

namespace opmean {

/// Eigendecomposition of a symmetric matrix: M = V diag(lambda) V^T with
/// lambda descending and V orthogonal. Column k of V pairs with lambda[k].
struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // descending
    Matrix eigenvectors;

    double min_eigenvalue() const { return eigenvalues.back(); }
    double max_eigenvalue() const { return eigenvalues.front(); }
    /// V diag(f(lambda)) V^T
    Matrix apply(double (*f)(double)) const;
    Matrix reconstruct() const;
};

/// Relative eigenvalue floor below which a claimed-PD input is rejected:
/// pd_floor = 1e-12 * lambda_max.
inline constexpr double kPdFloorRel = 1e-12;

/// Cyclic Jacobi eigensolver. Off-diagonal Frobenius threshold
/// 1e-13*||M||_F, 100-sweep cap. Deterministic eigenvector sign convention:
/// first component of magnitude > 1e-12 made positive.
SpectralDecomposition eigh(const Matrix& m);

/// V diag(lambda_i^p) V^T for PD input; p = 0 gives exact identity.
Matrix matrix_power(const Matrix& m, double p);
inline Matrix spd_sqrt(const Matrix& m) { return matrix_power(m, 0.5); }
inline Matrix spd_inverse(const Matrix& m) { return matrix_power(m, -1.0); }

Matrix matrix_log(const Matrix& m);
Matrix matrix_exp(const Matrix& m);

/// |X| = (X^T X)^{1/2}; PSD output, eigenvalue roundoff below zero clamped.
Matrix abs_of(const Matrix& x);

/// Orthogonal factor of the polar decomposition X = U |X|; X must be
/// nonsingular.
Matrix polar_unitary(const Matrix& x);

/// log|det(M)| via LU with partial pivoting; -infinity for a singular M.
/// Keeps full relative accuracy at condition numbers where an eigenvalue
/// product has already lost it.
double log_abs_det(const Matrix& m);

/// Three-valued positive semidefiniteness test with band
/// tol.abs + tol.rel * max|lambda(M)|. Exact zero matrices (margin exactly 0,
/// as arises from comparing a matrix with itself) count as holds.
OrderVerdict is_pd(const Matrix& m, const Tolerance& tol = {});

}  // namespace opmean
