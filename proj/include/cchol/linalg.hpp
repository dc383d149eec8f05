#pragma once

#include <complex>

#include <Eigen/Dense>

#include "cchol/errors.hpp"

namespace cchol {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Dense complex double-precision matrix; the universal carrier for
/// operators, blocks, and states. Logical indexing is (row, col),
/// 0-based. Column vectors are n x 1 matrices.
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Numerical cutoffs separating roundoff from genuine violations.
/// The underlying algebra is exact; floating point requires explicit gates.
struct Tolerances {
    /// Hermiticity gate: ||m - m*|| <= herm_tol * ||m||.
    double herm_tol = 1e-10;
    /// PSD gate: eigenvalues >= -psd_tol * ||m||; negatives above the gate
    /// are clamped to zero.
    double psd_tol = 1e-10;
    /// Pseudo-inverse rank cutoff: invert eigenvalues above
    /// dim * rank_tol_factor * lambda_max, zero the rest.
    double rank_tol_factor = 1e-12;
    /// Schur-complement gate in the block factorization: a diagonal block
    /// with an eigenvalue below -schur_tol * ||C|| means the input was not PSD.
    double schur_tol = 1e-8;
};

/// Result of a Hermitian eigendecomposition: m = U diag(lambda) U*.
struct EigenDecomposition {
    RealVector eigenvalues;     ///< ascending
    ComplexMatrix eigenvectors; ///< orthonormal columns, one per eigenvalue
};

/// (m + m*) / 2. Guarantees real eigenvalues for the eigensolver.
ComplexMatrix hermitize(const ComplexMatrix& m);

/// True iff every entry is finite (no NaN/Inf in either component).
bool has_finite_entries(const ComplexMatrix& m);

/// Eigendecomposition of the symmetrized input (m + m*)/2.
/// Throws DimensionError if not square, NotHermitianError if
/// ||m - m*|| > herm_tol * ||m||, NumericalError on non-convergence.
EigenDecomposition hermitian_eig(const ComplexMatrix& m,
                                 double herm_tol = Tolerances{}.herm_tol);

/// Unique PSD square root U diag(sqrt(max(lambda, 0))) U*.
/// Eigenvalues in [-psd_tol * ||m||, 0) are clamped to zero; anything below
/// the gate throws NotPsdError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol = {});

/// Moore-Penrose pseudo-inverse of a Hermitian PSD matrix: eigenvalues above
/// rank_tol * lambda_max are inverted, the rest map to zero. lambda_max = 0
/// (the zero operator) yields the zero matrix. rank_tol must be positive.
ComplexMatrix pinv_psd(const ComplexMatrix& m, double rank_tol,
                       const Tolerances& tol = {});

/// pinv_psd with the default cutoff rank_tol = dim * rank_tol_factor.
ComplexMatrix pinv_psd(const ComplexMatrix& m, const Tolerances& tol = {});

/// Regularized pseudo-inverse approximant U diag(h_n(lambda)) U* with
/// h_n(t) = t / (t^2 + 2^-n). Converges to pinv_psd as n grows; serves as a
/// verification oracle for the cutoff-based path.
ComplexMatrix pinv_approximant(const ComplexMatrix& m, int n,
                               const Tolerances& tol = {});

/// Kronecker product, shape (a.rows * b.rows) x (a.cols * b.cols);
/// block (r, c) of the result is a(r, c) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Keep { first, second };

/// Partial trace of an operator on C^dim_a (x) C^dim_b, joint index
/// (a, b) = a * dim_b + b. Keep::first sums out b, Keep::second sums out a.
ComplexMatrix partial_trace(const ComplexMatrix& m, Index dim_a, Index dim_b,
                            Keep keep);

/// Row-major vectorization: position a * cols + c holds entry (a, c).
ComplexMatrix vec(const ComplexMatrix& m);

/// Inverse of vec. v must be a column vector of length rows * cols.
ComplexMatrix unvec(const ComplexMatrix& v, Index rows, Index cols);

} // namespace cchol
