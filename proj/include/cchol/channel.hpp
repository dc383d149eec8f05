#pragma once

#include <vector>

#include "cchol/linalg.hpp"

namespace cchol {

/// (N*d) x (N*d) matrix carrying a d x d block structure indexed by basis
/// pairs of the input space: block (i, j) sits at rows i*d..(i+1)*d-1,
/// cols j*d..(j+1)*d-1 (0-based block indices).
struct BlockMatrix {
    Index n_blocks = 0;  ///< N
    Index block_dim = 0; ///< d
    ComplexMatrix data;  ///< (N*d) x (N*d)

    BlockMatrix() = default;
    BlockMatrix(Index n, Index d)
        : n_blocks(n), block_dim(d),
          data(ComplexMatrix::Zero(n * d, n * d)) {}

    ComplexMatrix block(Index i, Index j) const;
    void set_block(Index i, Index j, const ComplexMatrix& b);
};

/// A CP-map candidate Phi : L(C^N) -> L(C^d), stored as the entry family
/// C_{i,j} = Phi(E_{ij}) which determines Phi by linearity.
struct ChannelSpec {
    Index dim_in = 0;                   ///< N
    Index dim_out = 0;                  ///< d
    std::vector<ComplexMatrix> entries; ///< N*N blocks, entries[i*N + j] = C_{i,j}

    static ChannelSpec zero(Index n, Index d);

    const ComplexMatrix& entry(Index i, Index j) const;
    ComplexMatrix& entry(Index i, Index j);

    /// Throws DimensionError unless every entry is dim_out x dim_out and
    /// the family has N*N members.
    void validate_shape() const;
};

struct KrausImport {
    ChannelSpec channel;
    bool trace_preserving = false; ///< sum_k w_k* w_k = I within 1e-10
    double tp_residual = 0.0;      ///< ||sum_k w_k* w_k - I||
};

/// Channel from Kraus operators (each d x N): C_{i,j} = sum_k w_k E_{ij} w_k*.
/// The trace-preservation normalization sum_k w_k* w_k = I is reported,
/// not enforced.
KrausImport from_kraus(const std::vector<ComplexMatrix>& kraus);

/// Entries C_{i,j} = v E_{ij} v* of the adjoint action s -> v s v*
/// for v of shape d x N.
ChannelSpec adjoint_channel(const ComplexMatrix& v);

/// Choi matrix over the initial segment {1..n}: block (i, j) = C_{i,j}
/// for i, j < n. Requires 1 <= n <= N.
BlockMatrix choi_matrix(const ChannelSpec& ch, Index n);

/// Full Choi matrix (n = N).
BlockMatrix choi_matrix(const ChannelSpec& ch);

struct CpVerdict {
    bool completely_positive = false;
    double min_eigenvalue = 0.0; ///< of the full Choi matrix
};

/// Complete positivity via the Choi criterion: verdict is true iff the full
/// Choi matrix has min eigenvalue >= -tol * ||Choi||. Principal sub-blocks
/// of a PSD matrix are PSD, so the full matrix covers every finite index set.
CpVerdict is_cp(const ChannelSpec& ch, double tol = 1e-10);

/// max_{i,j} |tr C_{i,j} - delta_{ij}|.
double tp_residual(const ChannelSpec& ch);

/// True iff tp_residual(ch) <= tol.
bool is_tp(const ChannelSpec& ch, double tol = 1e-10);

/// Hermiticity preservation measured on the entry family:
/// max_{i,j} ||C_{j,i} - C_{i,j}*||, relative to ||Choi||.
double hermiticity_residual(const ChannelSpec& ch);

/// Phi(s) = sum_{i,j} s(i,j) * C_{i,j} for s of shape N x N.
ComplexMatrix apply_channel(const ChannelSpec& ch, const ComplexMatrix& s);

/// Phi(s) evaluated through the Choi contraction
/// (|O> (x) 1)* (s (x) Choi) (|O> (x) 1) with O = sum_i e_i (x) e_i.
/// Agrees with apply_channel; kept as an independent cross-check route.
ComplexMatrix apply_via_choi(const ChannelSpec& ch, const ComplexMatrix& s);

/// The universal trace-preserving map on the coordinatized Hilbert-Schmidt
/// space of d x (N*d) operators: Psi(rho)[a, a'] = sum_c rho[(a,c), (a',c)]
/// with joint index (a, c) = a*(N*d) + c. For rank-one rho = vec(w1) vec(w2)*
/// this gives w1 w2*. rho must be square of dimension N*d^2.
ComplexMatrix apply_universal_psi(const ComplexMatrix& rho, Index n, Index d);

} // namespace cchol
