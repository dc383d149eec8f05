#include "cchol/linalg.hpp"

#include <cmath>
#include <string>

namespace cchol {

namespace {

void require_square(const ComplexMatrix& m, const char* op) {
    if (m.rows() != m.cols())
        throw DimensionError(std::string(op) + ": input is " +
                             std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected square");
}

void require_hermitian(const ComplexMatrix& m, double herm_tol, const char* op) {
    const double scale = m.norm();
    const double residual = (m - m.adjoint()).norm();
    if (residual > herm_tol * scale)
        throw NotHermitianError(std::string(op) + ": ||m - m*|| = " +
                                std::to_string(residual) + " exceeds " +
                                std::to_string(herm_tol) + " * ||m||");
}

// Spectral map U f(lambda) U* of the symmetrized input, re-symmetrized to
// keep the result exactly Hermitian.
template <class Fn>
ComplexMatrix spectral_map(const EigenDecomposition& eig, Fn f) {
    RealVector mapped(eig.eigenvalues.size());
    for (Index i = 0; i < eig.eigenvalues.size(); ++i)
        mapped[i] = f(eig.eigenvalues[i]);
    ComplexMatrix out = eig.eigenvectors *
                        mapped.cast<Complex>().asDiagonal() *
                        eig.eigenvectors.adjoint();
    return hermitize(out);
}

// PSD gate shared by psd_sqrt / pinv_psd: eigenvalues below
// -psd_tol * max|lambda| are an error, the rest are clamped to >= 0.
RealVector clamp_psd_spectrum(const EigenDecomposition& eig, double psd_tol,
                              const char* op) {
    const double lambda_max_abs =
        eig.eigenvalues.size() ? eig.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    const double gate = psd_tol * lambda_max_abs;
    RealVector clamped = eig.eigenvalues;
    for (Index i = 0; i < clamped.size(); ++i) {
        if (clamped[i] < -gate)
            throw NotPsdError(std::string(op) + ": eigenvalue " +
                              std::to_string(clamped[i]) + " below -" +
                              std::to_string(gate));
        if (clamped[i] < 0.0) clamped[i] = 0.0;
    }
    return clamped;
}

} // namespace

ComplexMatrix hermitize(const ComplexMatrix& m) {
    return 0.5 * (m + m.adjoint().eval());
}

bool has_finite_entries(const ComplexMatrix& m) {
    for (Index c = 0; c < m.cols(); ++c)
        for (Index r = 0; r < m.rows(); ++r)
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag()))
                return false;
    return true;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double herm_tol) {
    require_square(m, "hermitian_eig");
    require_hermitian(m, herm_tol, "hermitian_eig");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m));
    if (solver.info() != Eigen::Success)
        throw NumericalError("hermitian_eig: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol) {
    const EigenDecomposition eig = hermitian_eig(m, tol.herm_tol);
    const RealVector clamped = clamp_psd_spectrum(eig, tol.psd_tol, "psd_sqrt");
    return spectral_map({clamped, eig.eigenvectors},
                        [](double t) { return std::sqrt(t); });
}

ComplexMatrix pinv_psd(const ComplexMatrix& m, double rank_tol,
                       const Tolerances& tol) {
    if (!(rank_tol > 0.0))
        throw std::invalid_argument("pinv_psd: rank_tol must be positive");
    const EigenDecomposition eig = hermitian_eig(m, tol.herm_tol);
    const RealVector clamped = clamp_psd_spectrum(eig, tol.psd_tol, "pinv_psd");
    const double lambda_max = clamped.size() ? clamped.maxCoeff() : 0.0;
    const double cutoff = rank_tol * lambda_max;
    // lambda_max = 0: every eigenvalue is treated as zero, pinv(0) = 0.
    return spectral_map({clamped, eig.eigenvectors}, [&](double t) {
        return (lambda_max > 0.0 && t > cutoff) ? 1.0 / t : 0.0;
    });
}

ComplexMatrix pinv_psd(const ComplexMatrix& m, const Tolerances& tol) {
    return pinv_psd(m, static_cast<double>(std::max<Index>(m.rows(), 1)) *
                           tol.rank_tol_factor,
                    tol);
}

ComplexMatrix pinv_approximant(const ComplexMatrix& m, int n,
                               const Tolerances& tol) {
    if (n < 1) throw std::invalid_argument("pinv_approximant: n must be >= 1");
    const EigenDecomposition eig = hermitian_eig(m, tol.herm_tol);
    const double reg = std::ldexp(1.0, -n); // 2^-n
    return spectral_map(eig, [&](double t) { return t / (t * t + reg); });
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index r = 0; r < a.rows(); ++r)
        for (Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) =
                a(r, c) * b;
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Index dim_a, Index dim_b,
                            Keep keep) {
    if (dim_a < 1 || dim_b < 1 || m.rows() != m.cols() ||
        m.rows() != dim_a * dim_b)
        throw DimensionError("partial_trace: input must be square of dimension " +
                             std::to_string(dim_a) + " * " + std::to_string(dim_b));
    if (keep == Keep::first) {
        ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
        for (Index a = 0; a < dim_a; ++a)
            for (Index a2 = 0; a2 < dim_a; ++a2)
                for (Index b = 0; b < dim_b; ++b)
                    out(a, a2) += m(a * dim_b + b, a2 * dim_b + b);
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (Index b = 0; b < dim_b; ++b)
        for (Index b2 = 0; b2 < dim_b; ++b2)
            for (Index a = 0; a < dim_a; ++a)
                out(b, b2) += m(a * dim_b + b, a * dim_b + b2);
    return out;
}

ComplexMatrix vec(const ComplexMatrix& m) {
    ComplexMatrix out(m.rows() * m.cols(), 1);
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            out(r * m.cols() + c, 0) = m(r, c);
    return out;
}

ComplexMatrix unvec(const ComplexMatrix& v, Index rows, Index cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw DimensionError("unvec: expected a column vector of length " +
                             std::to_string(rows * cols));
    ComplexMatrix out(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c)
            out(r, c) = v(r * cols + c, 0);
    return out;
}

} // namespace cchol
