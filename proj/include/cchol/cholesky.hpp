#pragma once

#include <vector>

#include "cchol/channel.hpp"
#include "cchol/linalg.hpp"

namespace cchol {

/// Factors of the bi-partite Cholesky decomposition C = L_hat D L_hat* = L L*
/// of a PSD block matrix: unit-lower-triangular L_hat (identity diagonal
/// blocks), PSD diagonal blocks D, scaled lower blocks L_{i,j} =
/// L_hat_{i,j} sqrt(D_{j,j}), and the blocks R_hat of L_hat^{-1}.
struct CholeskyFactors {
    Index n_blocks = 0;  ///< N
    Index block_dim = 0; ///< d
    std::vector<ComplexMatrix> l;     ///< N*N blocks, l[i*N + j]
    std::vector<ComplexMatrix> l_hat; ///< unit lower triangular
    std::vector<ComplexMatrix> d;     ///< N diagonal blocks, PSD
    std::vector<ComplexMatrix> r_hat; ///< entries of L_hat^{-1}

    const ComplexMatrix& L(Index i, Index j) const;
    const ComplexMatrix& Lhat(Index i, Index j) const;
    const ComplexMatrix& D(Index i) const;
    const ComplexMatrix& Rhat(Index i, Index j) const;
};

/// Canonical bi-partite Cholesky decomposition of a PSD block matrix, row by
/// row in the input's basis order (no pivoting; the ordering is part of the
/// contract). Diagonal blocks are symmetrized and eigenvalue-clamped before
/// sqrt and pseudo-inverse; a block with an eigenvalue below
/// -schur_tol * ||C|| throws NotPsdBlockError (the input was not PSD).
CholeskyFactors choi_cholesky(const BlockMatrix& c, const Tolerances& tol = {});

/// Convenience overload: factorizes the full Choi matrix of a channel.
CholeskyFactors choi_cholesky(const ChannelSpec& ch, const Tolerances& tol = {});

/// Reassembles L L* as a BlockMatrix; block (i, j) = sum_k L_{i,k} L_{j,k}*.
BlockMatrix reconstruct(const CholeskyFactors& f);

/// Inverse of a unit-lower-triangular block matrix via the row recursion
/// R_hat_{i,j} = -sum_{k=j}^{i-1} L_hat_{i,k} R_hat_{k,j}. Input structure is
/// checked exactly (identity diagonal blocks, zero above the diagonal);
/// violations throw NotUniTriangularError.
BlockMatrix uni_triangular_inverse(const BlockMatrix& l_hat);

} // namespace cchol
