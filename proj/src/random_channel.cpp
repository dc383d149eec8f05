#include "cchol/random_channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cchol {

double GaussianSource::uniform() {
    // 53 random bits, shifted into (0, 1].
    const std::uint64_t bits = rng_() >> 11;
    return (static_cast<double>(bits) + 1.0) * 0x1p-53;
}

double GaussianSource::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

ComplexMatrix random_gaussian(GaussianSource& g, Index rows, Index cols) {
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c) {
            const double re = g();
            const double im = g();
            m(r, c) = Complex(re, im);
        }
    return m;
}

ComplexMatrix random_isometry(GaussianSource& g, Index rows, Index cols) {
    if (rows < cols)
        throw InvalidDimensionsError(
            "random_isometry: need rows >= cols, got " + std::to_string(rows) +
            " x " + std::to_string(cols));
    const ComplexMatrix gauss = random_gaussian(g, rows, cols);
    Eigen::HouseholderQR<ComplexMatrix> qr(gauss);
    return qr.householderQ() * ComplexMatrix::Identity(rows, cols);
}

ComplexMatrix random_density(GaussianSource& g, Index dim) {
    const ComplexMatrix m = random_gaussian(g, dim, dim);
    ComplexMatrix rho = m * m.adjoint();
    return rho / rho.trace().real();
}

StinespringChannel random_cptp_channel(std::uint64_t seed, Index dim_in,
                                       Index dim_out, Index env_dim) {
    if (dim_in < 1 || dim_out < 1 || env_dim < 1)
        throw InvalidDimensionsError(
            "random_cptp_channel: dimensions must be positive");
    if (dim_in > dim_out * env_dim)
        throw InvalidDimensionsError(
            "random_cptp_channel: no isometry C^" + std::to_string(dim_in) +
            " -> C^" + std::to_string(dim_out) + " (x) C^" +
            std::to_string(env_dim) + " exists (need N <= d*env)");

    GaussianSource g(seed);
    StinespringChannel out;
    out.dim_in = dim_in;
    out.dim_out = dim_out;
    out.env_dim = env_dim;
    out.w = random_isometry(g, dim_out * env_dim, dim_in);

    out.kraus.reserve(static_cast<std::size_t>(env_dim));
    for (Index mu = 0; mu < env_dim; ++mu) {
        ComplexMatrix k(dim_out, dim_in);
        for (Index a = 0; a < dim_out; ++a)
            k.row(a) = out.w.row(a * env_dim + mu);
        out.kraus.push_back(std::move(k));
    }
    out.channel = from_kraus(out.kraus).channel;
    return out;
}

} // namespace cchol
