#include "cchol/cholesky.hpp"

#include <cmath>
#include <string>

namespace cchol {

namespace {

std::size_t flat(Index i, Index j, Index n) {
    return static_cast<std::size_t>(i * n + j);
}

void require_block_index(const CholeskyFactors& f, Index i, Index j) {
    if (i < 0 || j < 0 || i >= f.n_blocks || j >= f.n_blocks)
        throw DimensionError("CholeskyFactors: block index out of range");
}

} // namespace

const ComplexMatrix& CholeskyFactors::L(Index i, Index j) const {
    require_block_index(*this, i, j);
    return l[flat(i, j, n_blocks)];
}

const ComplexMatrix& CholeskyFactors::Lhat(Index i, Index j) const {
    require_block_index(*this, i, j);
    return l_hat[flat(i, j, n_blocks)];
}

const ComplexMatrix& CholeskyFactors::D(Index i) const {
    require_block_index(*this, i, i);
    return d[static_cast<std::size_t>(i)];
}

const ComplexMatrix& CholeskyFactors::Rhat(Index i, Index j) const {
    require_block_index(*this, i, j);
    return r_hat[flat(i, j, n_blocks)];
}

CholeskyFactors choi_cholesky(const BlockMatrix& c, const Tolerances& tol) {
    const Index n = c.n_blocks;
    const Index dim = c.block_dim;
    if (n < 1 || dim < 1 || c.data.rows() != n * dim ||
        c.data.cols() != n * dim)
        throw DimensionError("choi_cholesky: inconsistent block structure");

    const double scale = c.data.norm();
    const ComplexMatrix zero = ComplexMatrix::Zero(dim, dim);
    const ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);

    CholeskyFactors f;
    f.n_blocks = n;
    f.block_dim = dim;
    f.l.assign(static_cast<std::size_t>(n * n), zero);
    f.l_hat.assign(static_cast<std::size_t>(n * n), zero);
    f.r_hat.assign(static_cast<std::size_t>(n * n), zero);
    f.d.assign(static_cast<std::size_t>(n), zero);
    for (Index i = 0; i < n; ++i) {
        f.l_hat[flat(i, i, n)] = identity;
        f.r_hat[flat(i, i, n)] = identity;
    }

    // One eigendecomposition per diagonal block backs D, sqrt(D) and D^dagger,
    // so all three see the identical clamped spectrum.
    std::vector<ComplexMatrix> d_pinv(static_cast<std::size_t>(n), zero);

    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < i; ++j) {
            // L_hat_{i,j} = (sum_{k=1}^{i-1} C_{i,k} R_hat_{j,k}*) D_{j,j}^dagger;
            // terms with k > j vanish (R_hat is lower triangular).
            ComplexMatrix acc = zero;
            for (Index k = 0; k < i; ++k)
                acc += c.block(i, k) * f.r_hat[flat(j, k, n)].adjoint();
            f.l_hat[flat(i, j, n)] = acc * d_pinv[static_cast<std::size_t>(j)];
            f.l[flat(i, j, n)] =
                f.l_hat[flat(i, j, n)] * f.l[flat(j, j, n)];
        }

        ComplexMatrix schur = c.block(i, i);
        for (Index j = 0; j < i; ++j)
            schur -= f.l[flat(i, j, n)] * f.l[flat(i, j, n)].adjoint();
        schur = hermitize(schur);

        // herm_tol = 1: the block is Hermitian by construction, skip the gate.
        const EigenDecomposition eig = hermitian_eig(schur, 1.0);
        RealVector lambda = eig.eigenvalues;
        for (Index k = 0; k < lambda.size(); ++k) {
            if (lambda[k] < -tol.schur_tol * scale)
                throw NotPsdBlockError(
                    "choi_cholesky: Schur complement block " + std::to_string(i) +
                    " has eigenvalue " + std::to_string(lambda[k]) +
                    "; input block matrix is not PSD");
            if (lambda[k] < 0.0) lambda[k] = 0.0;
        }

        const double lambda_max = lambda.size() ? lambda.maxCoeff() : 0.0;
        const double cutoff =
            static_cast<double>(dim) * tol.rank_tol_factor * lambda_max;
        RealVector sqrt_lambda(lambda.size());
        RealVector inv_lambda(lambda.size());
        for (Index k = 0; k < lambda.size(); ++k) {
            sqrt_lambda[k] = std::sqrt(lambda[k]);
            inv_lambda[k] =
                (lambda_max > 0.0 && lambda[k] > cutoff) ? 1.0 / lambda[k] : 0.0;
        }
        const auto assemble = [&](const RealVector& v) {
            return hermitize(ComplexMatrix(eig.eigenvectors *
                                           v.cast<Complex>().asDiagonal() *
                                           eig.eigenvectors.adjoint()));
        };
        f.d[static_cast<std::size_t>(i)] = assemble(lambda);
        f.l[flat(i, i, n)] = assemble(sqrt_lambda);
        d_pinv[static_cast<std::size_t>(i)] = assemble(inv_lambda);

        // Row i of R_hat = row i of L_hat^{-1}.
        for (Index j = 0; j < i; ++j) {
            ComplexMatrix acc = zero;
            for (Index k = j; k < i; ++k)
                acc += f.l_hat[flat(i, k, n)] * f.r_hat[flat(k, j, n)];
            f.r_hat[flat(i, j, n)] = -acc;
        }
    }
    return f;
}

CholeskyFactors choi_cholesky(const ChannelSpec& ch, const Tolerances& tol) {
    return choi_cholesky(choi_matrix(ch), tol);
}

BlockMatrix reconstruct(const CholeskyFactors& f) {
    BlockMatrix out(f.n_blocks, f.block_dim);
    for (Index i = 0; i < f.n_blocks; ++i)
        for (Index j = 0; j < f.n_blocks; ++j) {
            ComplexMatrix acc = ComplexMatrix::Zero(f.block_dim, f.block_dim);
            for (Index k = 0; k <= std::min(i, j); ++k)
                acc += f.L(i, k) * f.L(j, k).adjoint();
            out.set_block(i, j, acc);
        }
    return out;
}

BlockMatrix uni_triangular_inverse(const BlockMatrix& l_hat) {
    const Index n = l_hat.n_blocks;
    const Index dim = l_hat.block_dim;
    if (n < 1 || dim < 1 || l_hat.data.rows() != n * dim ||
        l_hat.data.cols() != n * dim)
        throw DimensionError("uni_triangular_inverse: inconsistent block structure");

    const ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);
    for (Index i = 0; i < n; ++i) {
        if ((l_hat.block(i, i) - identity).cwiseAbs().maxCoeff() != 0.0)
            throw NotUniTriangularError(
                "uni_triangular_inverse: diagonal block " + std::to_string(i) +
                " is not the identity");
        for (Index j = i + 1; j < n; ++j)
            if (l_hat.block(i, j).cwiseAbs().maxCoeff() != 0.0)
                throw NotUniTriangularError(
                    "uni_triangular_inverse: block (" + std::to_string(i) + "," +
                    std::to_string(j) + ") above the diagonal is nonzero");
    }

    BlockMatrix r_hat(n, dim);
    for (Index i = 0; i < n; ++i) r_hat.set_block(i, i, identity);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < i; ++j) {
            ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
            for (Index k = j; k < i; ++k)
                acc += l_hat.block(i, k) * r_hat.block(k, j);
            r_hat.set_block(i, j, -acc);
        }
    return r_hat;
}

} // namespace cchol
