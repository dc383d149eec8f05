#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cchol/channel.hpp"
#include "cchol/linalg.hpp"

namespace cchol {

/// Deterministic standard-normal stream: mt19937_64 (fully specified by the
/// standard) mapped through the 53-bit ladder and Box-Muller. Avoids
/// std::normal_distribution, whose output is implementation-defined.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    /// One standard-normal draw.
    double operator()();

    /// Uniform in (0, 1].
    double uniform();

  private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// rows x cols matrix with independent standard-complex-normal entries.
ComplexMatrix random_gaussian(GaussianSource& g, Index rows, Index cols);

/// rows x cols matrix with orthonormal columns (requires rows >= cols),
/// obtained from the QR factorization of a Gaussian draw.
ComplexMatrix random_isometry(GaussianSource& g, Index rows, Index cols);

/// Random density matrix: M M* normalized to unit trace.
ComplexMatrix random_density(GaussianSource& g, Index dim);

/// A CPTP channel in Stinespring form: Phi(s) = tr_env(W s W*) for an
/// isometry W : C^N -> C^d (x) C^env (index (a, mu) = a*env + mu).
/// Trace preservation is exact by construction (W* W = I).
struct StinespringChannel {
    Index dim_in = 0;  ///< N
    Index dim_out = 0; ///< d
    Index env_dim = 0; ///< env
    ComplexMatrix w;   ///< (d*env) x N isometry
    std::vector<ComplexMatrix> kraus; ///< K_mu = (I (x) <mu|) W, each d x N
    ChannelSpec channel;
};

/// Seeded random CPTP channel. Requires dim_in <= dim_out * env_dim
/// (otherwise no isometry exists; throws InvalidDimensionsError).
StinespringChannel random_cptp_channel(std::uint64_t seed, Index dim_in,
                                       Index dim_out, Index env_dim);

} // namespace cchol
