#include "cchol/channel.hpp"

#include <string>

namespace cchol {

ComplexMatrix BlockMatrix::block(Index i, Index j) const {
    if (i < 0 || j < 0 || i >= n_blocks || j >= n_blocks)
        throw DimensionError("BlockMatrix::block: index out of range");
    return data.block(i * block_dim, j * block_dim, block_dim, block_dim);
}

void BlockMatrix::set_block(Index i, Index j, const ComplexMatrix& b) {
    if (i < 0 || j < 0 || i >= n_blocks || j >= n_blocks)
        throw DimensionError("BlockMatrix::set_block: index out of range");
    if (b.rows() != block_dim || b.cols() != block_dim)
        throw DimensionError("BlockMatrix::set_block: block must be " +
                             std::to_string(block_dim) + "x" +
                             std::to_string(block_dim));
    data.block(i * block_dim, j * block_dim, block_dim, block_dim) = b;
}

ChannelSpec ChannelSpec::zero(Index n, Index d) {
    if (n < 1 || d < 1)
        throw DimensionError("ChannelSpec: dimensions must be positive");
    ChannelSpec ch;
    ch.dim_in = n;
    ch.dim_out = d;
    ch.entries.assign(static_cast<std::size_t>(n * n),
                      ComplexMatrix::Zero(d, d));
    return ch;
}

const ComplexMatrix& ChannelSpec::entry(Index i, Index j) const {
    if (i < 0 || j < 0 || i >= dim_in || j >= dim_in)
        throw DimensionError("ChannelSpec::entry: index out of range");
    return entries[static_cast<std::size_t>(i * dim_in + j)];
}

ComplexMatrix& ChannelSpec::entry(Index i, Index j) {
    if (i < 0 || j < 0 || i >= dim_in || j >= dim_in)
        throw DimensionError("ChannelSpec::entry: index out of range");
    return entries[static_cast<std::size_t>(i * dim_in + j)];
}

void ChannelSpec::validate_shape() const {
    if (dim_in < 1 || dim_out < 1)
        throw DimensionError("ChannelSpec: dimensions must be positive");
    if (entries.size() != static_cast<std::size_t>(dim_in * dim_in))
        throw DimensionError("ChannelSpec: expected " +
                             std::to_string(dim_in * dim_in) + " entries, got " +
                             std::to_string(entries.size()));
    for (const auto& e : entries)
        if (e.rows() != dim_out || e.cols() != dim_out)
            throw DimensionError("ChannelSpec: every entry must be " +
                                 std::to_string(dim_out) + "x" +
                                 std::to_string(dim_out));
}

KrausImport from_kraus(const std::vector<ComplexMatrix>& kraus) {
    if (kraus.empty())
        throw EmptyKrausError("from_kraus: at least one Kraus operator required");
    const Index d = kraus.front().rows();
    const Index n = kraus.front().cols();
    if (d < 1 || n < 1)
        throw DimensionError("from_kraus: operators must be nonempty");
    for (const auto& w : kraus)
        if (w.rows() != d || w.cols() != n)
            throw DimensionError("from_kraus: all operators must share shape " +
                                 std::to_string(d) + "x" + std::to_string(n));

    KrausImport out;
    out.channel = ChannelSpec::zero(n, d);
    // w_k E_{ij} w_k* = (column i of w_k) (column j of w_k)*
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            ComplexMatrix c = ComplexMatrix::Zero(d, d);
            for (const auto& w : kraus) c += w.col(i) * w.col(j).adjoint();
            out.channel.entry(i, j) = c;
        }

    ComplexMatrix normalization = ComplexMatrix::Zero(n, n);
    for (const auto& w : kraus) normalization += w.adjoint() * w;
    out.tp_residual = (normalization - ComplexMatrix::Identity(n, n)).norm();
    out.trace_preserving = out.tp_residual <= 1e-10;
    return out;
}

ChannelSpec adjoint_channel(const ComplexMatrix& v) {
    return from_kraus({v}).channel;
}

BlockMatrix choi_matrix(const ChannelSpec& ch, Index n) {
    ch.validate_shape();
    if (n < 1 || n > ch.dim_in)
        throw DimensionError("choi_matrix: n must be in [1, " +
                             std::to_string(ch.dim_in) + "]");
    BlockMatrix choi(n, ch.dim_out);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            choi.set_block(i, j, ch.entry(i, j));
    return choi;
}

BlockMatrix choi_matrix(const ChannelSpec& ch) {
    return choi_matrix(ch, ch.dim_in);
}

CpVerdict is_cp(const ChannelSpec& ch, double tol) {
    const BlockMatrix choi = choi_matrix(ch);
    const EigenDecomposition eig = hermitian_eig(choi.data);
    CpVerdict verdict;
    verdict.min_eigenvalue = eig.eigenvalues.minCoeff();
    verdict.completely_positive =
        verdict.min_eigenvalue >= -tol * choi.data.norm();
    return verdict;
}

double tp_residual(const ChannelSpec& ch) {
    ch.validate_shape();
    double worst = 0.0;
    for (Index i = 0; i < ch.dim_in; ++i)
        for (Index j = 0; j < ch.dim_in; ++j) {
            const Complex tr = ch.entry(i, j).trace();
            const Complex expected = (i == j) ? Complex(1.0) : Complex(0.0);
            worst = std::max(worst, std::abs(tr - expected));
        }
    return worst;
}

bool is_tp(const ChannelSpec& ch, double tol) {
    return tp_residual(ch) <= tol;
}

double hermiticity_residual(const ChannelSpec& ch) {
    const BlockMatrix choi = choi_matrix(ch);
    const double scale = choi.data.norm();
    double worst = 0.0;
    for (Index i = 0; i < ch.dim_in; ++i)
        for (Index j = 0; j < ch.dim_in; ++j)
            worst = std::max(
                worst, (ch.entry(j, i) - ch.entry(i, j).adjoint()).norm());
    return scale > 0.0 ? worst / scale : worst;
}

ComplexMatrix apply_channel(const ChannelSpec& ch, const ComplexMatrix& s) {
    ch.validate_shape();
    if (s.rows() != ch.dim_in || s.cols() != ch.dim_in)
        throw DimensionError("apply_channel: state must be " +
                             std::to_string(ch.dim_in) + "x" +
                             std::to_string(ch.dim_in));
    ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out, ch.dim_out);
    for (Index i = 0; i < ch.dim_in; ++i)
        for (Index j = 0; j < ch.dim_in; ++j)
            out += s(i, j) * ch.entry(i, j);
    return out;
}

ComplexMatrix apply_via_choi(const ChannelSpec& ch, const ComplexMatrix& s) {
    ch.validate_shape();
    const Index n = ch.dim_in;
    const Index d = ch.dim_out;
    if (s.rows() != n || s.cols() != n)
        throw DimensionError("apply_via_choi: state must be " +
                             std::to_string(n) + "x" + std::to_string(n));
    // |O> (x) 1 maps xi to sum_i e_i (x) e_i (x) xi; joint row index
    // (i, j, b) = (i*n + j)*d + b over the first input copy, the Choi's
    // input leg, and its output leg.
    ComplexMatrix omega_embed = ComplexMatrix::Zero(n * n * d, d);
    for (Index i = 0; i < n; ++i)
        for (Index b = 0; b < d; ++b)
            omega_embed((i * n + i) * d + b, b) = 1.0;
    const BlockMatrix choi = choi_matrix(ch);
    return omega_embed.adjoint() * kron(s, choi.data) * omega_embed;
}

ComplexMatrix apply_universal_psi(const ComplexMatrix& rho, Index n, Index d) {
    if (n < 1 || d < 1)
        throw DimensionError("apply_universal_psi: dimensions must be positive");
    const Index hs_dim = n * d * d;
    if (rho.rows() != hs_dim || rho.cols() != hs_dim)
        throw DimensionError("apply_universal_psi: rho must be square of dimension " +
                             std::to_string(hs_dim));
    const Index cols = n * d; // columns of a Hilbert-Schmidt element
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (Index a = 0; a < d; ++a)
        for (Index a2 = 0; a2 < d; ++a2)
            for (Index c = 0; c < cols; ++c)
                out(a, a2) += rho(a * cols + c, a2 * cols + c);
    return out;
}

} // namespace cchol
