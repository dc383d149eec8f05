#include "cchol/dilation.hpp"

#include <cmath>
#include <string>

namespace cchol {

Resolution resolution_from_factors(const CholeskyFactors& f) {
    Resolution res;
    res.n_blocks = f.n_blocks;
    res.dim_out = f.block_dim;
    res.zetas.reserve(static_cast<std::size_t>(f.n_blocks));
    const Index d = f.block_dim;
    for (Index n = 0; n < f.n_blocks; ++n) {
        ComplexMatrix zeta = ComplexMatrix::Zero(d, f.n_blocks * d);
        for (Index k = 0; k <= n; ++k)
            zeta.block(0, k * d, d, d) = f.L(n, k);
        res.zetas.push_back(std::move(zeta));
    }
    return res;
}

Resolution resolution(const ChannelSpec& ch, const Tolerances& tol) {
    try {
        return resolution_from_factors(choi_cholesky(ch, tol));
    } catch (const NotPsdBlockError& e) {
        throw NotCpError(std::string("resolution: channel is not CP (") +
                         e.what() + ")");
    }
}

DilationOperator dilation_operator(const Resolution& res) {
    const Index n = res.n_blocks;
    const Index d = res.dim_out;
    if (n < 1 || d < 1 || res.zetas.size() != static_cast<std::size_t>(n))
        throw DimensionError("dilation_operator: malformed resolution");

    DilationOperator dil;
    dil.dim_in = n;
    dil.dim_out = d;
    dil.v = ComplexMatrix(n * d * d, n);
    for (Index col = 0; col < n; ++col) {
        const ComplexMatrix& zeta = res.zetas[static_cast<std::size_t>(col)];
        if (zeta.rows() != d || zeta.cols() != n * d)
            throw DimensionError("dilation_operator: zeta_" +
                                 std::to_string(col) + " must be " +
                                 std::to_string(d) + "x" +
                                 std::to_string(n * d));
        dil.v.col(col) = vec(zeta);
    }

    const ComplexMatrix gram = dil.v.adjoint() * dil.v;
    dil.isometry_residual =
        (gram - ComplexMatrix::Identity(n, n)).norm();
    const EigenDecomposition eig = hermitian_eig(gram);
    dil.sigma_max = std::sqrt(std::max(0.0, eig.eigenvalues.maxCoeff()));
    dil.is_isometry = dil.isometry_residual <= 1e-9;
    dil.is_contraction = dil.sigma_max <= 1.0 + 1e-9;
    return dil;
}

ComplexMatrix reconstruct_channel(const DilationOperator& dil,
                                  const ComplexMatrix& s) {
    if (s.rows() != dil.dim_in || s.cols() != dil.dim_in)
        throw DimensionError("reconstruct_channel: state must be " +
                             std::to_string(dil.dim_in) + "x" +
                             std::to_string(dil.dim_in));
    const ComplexMatrix rho = dil.v * s * dil.v.adjoint();
    return apply_universal_psi(rho, dil.dim_in, dil.dim_out);
}

HalmosUnitary halmos_unitary(const DilationOperator& dil, double unitary_tol) {
    if (!dil.is_isometry)
        throw NotIsometryError(
            "halmos_unitary: ||V*V - I|| = " +
            std::to_string(dil.isometry_residual) +
            " exceeds 1e-9; the channel is not trace-preserving");

    const Index n = dil.dim_in;
    const Index m = dil.v.rows(); // N*d^2
    HalmosUnitary hu;
    hu.dim_in = n;
    hu.hs_dim = m;
    hu.u = ComplexMatrix::Zero(m + n, m + n);
    hu.u.topLeftCorner(m, n) = dil.v;
    hu.u.topRightCorner(m, m) =
        ComplexMatrix::Identity(m, m) - dil.v * dil.v.adjoint();
    hu.u.bottomRightCorner(n, m) = dil.v.adjoint();

    const ComplexMatrix id = ComplexMatrix::Identity(m + n, m + n);
    hu.unitarity_residual = std::max((hu.u.adjoint() * hu.u - id).norm(),
                                     (hu.u * hu.u.adjoint() - id).norm());
    if (hu.unitarity_residual > unitary_tol)
        throw UnitarityError("halmos_unitary: unitarity residual " +
                             std::to_string(hu.unitarity_residual) +
                             " exceeds tolerance");
    return hu;
}

Resolution adjoint_reference(const ComplexMatrix& v_iso, double iso_tol) {
    const Index d = v_iso.rows();
    const Index n = v_iso.cols();
    if (n < 1 || d < 1)
        throw DimensionError("adjoint_reference: isometry must be nonempty");
    const double residual =
        (v_iso.adjoint() * v_iso - ComplexMatrix::Identity(n, n)).norm();
    if (residual > iso_tol)
        throw NotIsometryError("adjoint_reference: ||V*V - I|| = " +
                               std::to_string(residual));

    Resolution res;
    res.n_blocks = n;
    res.dim_out = d;
    res.zetas.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        // v E_{i,1} v* = (column i)(column 1)*, placed in column block 1.
        ComplexMatrix zeta = ComplexMatrix::Zero(d, n * d);
        zeta.block(0, 0, d, d) = v_iso.col(i) * v_iso.col(0).adjoint();
        res.zetas.push_back(std::move(zeta));
    }
    return res;
}

} // namespace cchol
