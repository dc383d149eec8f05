#include "cchol/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace cchol {

namespace {

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "channel: dim_in=" << r.dim_in << " dim_out=" << r.dim_out;
    if (!r.representation.empty())
        out << " representation=" << r.representation;
    out << "\n";

    if (r.hermitian_preserving)
        out << "hermitian-preserving: " << yesno(*r.hermitian_preserving)
            << "  (residual " << sci(r.hermiticity_residual.value_or(0.0))
            << ")\n";
    if (r.cp)
        out << "completely positive:  " << yesno(*r.cp)
            << "  (min Choi eigenvalue "
            << sci(r.min_choi_eigenvalue.value_or(0.0)) << ")\n";
    if (r.tp)
        out << "trace-preserving:     " << yesno(*r.tp) << "  (residual "
            << sci(r.tp_residual.value_or(0.0)) << ")\n";

    if (r.reconstruction_residual)
        out << "reconstruction residual ||LL* - C|| / ||C||: "
            << sci(*r.reconstruction_residual) << "\n";
    if (!r.d_block_norms.empty()) {
        out << "diagonal block norms ||D_ii||:";
        for (double v : r.d_block_norms) out << " " << sci(v);
        out << "\n";
    }
    if (!r.l_block_norms.empty()) {
        const Index n = static_cast<Index>(r.d_block_norms.size());
        out << "factor block norms ||L_ij|| (lower triangle):\n";
        for (Index i = 0; i < n; ++i) {
            out << " ";
            for (Index j = 0; j <= i; ++j)
                out << " " << sci(r.l_block_norms[static_cast<std::size_t>(
                                  i * n + j)]);
            out << "\n";
        }
    }

    if (r.isometry_residual)
        out << "||V*V - I||: " << sci(*r.isometry_residual)
            << "  (isometry: " << yesno(r.is_isometry.value_or(false)) << ")\n";
    if (r.sigma_max)
        out << "sigma_max(V): " << sci(*r.sigma_max)
            << "  (contraction: " << yesno(r.is_contraction.value_or(false))
            << ")\n";
    if (r.unitarity_residual)
        out << "unitarity residual: " << sci(*r.unitarity_residual) << "\n";

    if (r.roundtrip_residual)
        out << "round-trip residual (max over " << r.samples.value_or(0)
            << " random states and all basis elements): "
            << sci(*r.roundtrip_residual) << "\n";

    out << "elapsed: " << sci(r.elapsed_ms) << " ms\n";
    return out.str();
}

std::string render_json(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["dim_in"] = r.dim_in;
    j["dim_out"] = r.dim_out;
    if (!r.representation.empty()) j["representation"] = r.representation;

    if (r.hermitian_preserving) j["hermitian_preserving"] = *r.hermitian_preserving;
    if (r.hermiticity_residual) j["hermiticity_residual"] = *r.hermiticity_residual;
    if (r.cp) j["cp"] = *r.cp;
    if (r.min_choi_eigenvalue) j["min_choi_eigenvalue"] = *r.min_choi_eigenvalue;
    if (r.tp) j["tp"] = *r.tp;
    if (r.tp_residual) j["tp_residual"] = *r.tp_residual;

    if (r.reconstruction_residual)
        j["reconstruction_residual"] = *r.reconstruction_residual;
    if (!r.l_block_norms.empty()) j["l_block_norms"] = r.l_block_norms;
    if (!r.d_block_norms.empty()) j["d_block_norms"] = r.d_block_norms;

    if (r.isometry_residual) j["isometry_residual"] = *r.isometry_residual;
    if (r.sigma_max) j["sigma_max"] = *r.sigma_max;
    if (r.is_isometry) j["is_isometry"] = *r.is_isometry;
    if (r.is_contraction) j["is_contraction"] = *r.is_contraction;
    if (r.unitarity_residual) j["unitarity_residual"] = *r.unitarity_residual;

    if (r.roundtrip_residual) j["roundtrip_residual"] = *r.roundtrip_residual;
    if (r.samples) j["samples"] = *r.samples;

    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(1) + "\n";
}

} // namespace cchol
