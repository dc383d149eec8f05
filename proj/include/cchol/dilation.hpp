#pragma once

#include <vector>

#include "cchol/channel.hpp"
#include "cchol/cholesky.hpp"
#include "cchol/linalg.hpp"

namespace cchol {

/// Resolution vectors of a CP map: zetas[n] is the d x (N*d) operator
/// zeta_n = sum_{k<=n} <e_k| (x) L_{n,k}, columns indexed by (k, b) at
/// offset k*d + b. zeta_i zeta_j* = C_{i,j}.
struct Resolution {
    Index n_blocks = 0; ///< N
    Index dim_out = 0;  ///< d
    std::vector<ComplexMatrix> zetas;
};

/// Assembles the resolution from row n of the factor blocks L.
Resolution resolution_from_factors(const CholeskyFactors& f);

/// Full pipeline: factorize the channel's Choi matrix, then assemble the
/// resolution vectors. A Schur block going negative (input not CP) surfaces
/// as NotCpError.
Resolution resolution(const ChannelSpec& ch, const Tolerances& tol = {});

/// The dilation operator V of shape (N*d^2) x N, column n = vec(zeta_n).
/// For trace-preserving channels the zetas are orthonormal in the
/// Hilbert-Schmidt inner product, making V an isometry.
struct DilationOperator {
    Index dim_in = 0;  ///< N
    Index dim_out = 0; ///< d
    ComplexMatrix v;   ///< (N*d^2) x N
    double isometry_residual = 0.0; ///< ||V*V - I||
    double sigma_max = 0.0;         ///< largest singular value
    bool is_isometry = false;       ///< residual <= 1e-9
    bool is_contraction = false;    ///< sigma_max <= 1 + 1e-9
};

DilationOperator dilation_operator(const Resolution& res);

/// Psi(V s V*) for s of shape N x N; recovers Phi(s) when V came from the
/// channel's resolution.
ComplexMatrix reconstruct_channel(const DilationOperator& dil,
                                  const ComplexMatrix& s);

/// Block unitary [[V, 1 - V V*], [0, V*]] of dimension N + N*d^2 extending
/// an isometry V; acts on (input space) (+) (Hilbert-Schmidt space).
struct HalmosUnitary {
    Index dim_in = 0; ///< N
    Index hs_dim = 0; ///< N*d^2
    ComplexMatrix u;  ///< (N + N*d^2) square
    double unitarity_residual = 0.0; ///< max(||U*U - I||, ||U U* - I||)
};

/// Throws NotIsometryError unless dil.is_isometry; UnitarityError if the
/// assembled block matrix misses the unitarity gate.
HalmosUnitary halmos_unitary(const DilationOperator& dil,
                             double unitary_tol = 1e-9);

/// Closed-form resolution of the adjoint channel s -> v_iso s v_iso* of an
/// isometry v_iso (d x N, v_iso* v_iso = I): zeta_n = <e_1| (x) v_iso E_{n,1} v_iso*.
/// Golden oracle for resolution() on adjoint channels; no factorization runs.
Resolution adjoint_reference(const ComplexMatrix& v_iso, double iso_tol = 1e-10);

} // namespace cchol
