#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cchol/linalg.hpp"

namespace cchol {

/// Verdicts and residuals gathered by a CLI command. Every residual is a
/// nonnegative finite norm by construction. Sections a command did not run
/// stay empty and are omitted from the rendered output.
struct Report {
    std::string command;
    Index dim_in = 0;
    Index dim_out = 0;
    std::string representation;

    std::optional<bool> hermitian_preserving;
    std::optional<bool> cp;
    std::optional<bool> tp;
    std::optional<double> hermiticity_residual;
    std::optional<double> min_choi_eigenvalue;
    std::optional<double> tp_residual;

    std::optional<double> reconstruction_residual;
    std::vector<double> l_block_norms; ///< row-major N*N
    std::vector<double> d_block_norms; ///< N

    std::optional<double> isometry_residual; ///< ||V*V - I||
    std::optional<double> sigma_max;
    std::optional<bool> is_isometry;
    std::optional<bool> is_contraction;
    std::optional<double> unitarity_residual;

    std::optional<double> roundtrip_residual;
    std::optional<int> samples;

    double elapsed_ms = 0.0;
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);

} // namespace cchol
