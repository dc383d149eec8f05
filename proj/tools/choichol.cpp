// Command-line front end: channel file inspection, Choi-Cholesky
// decomposition, dilation, round-trip verification, and random CPTP
// channel generation.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 channel not CP,
// 3 not TP where required, 4 round-trip residual above tolerance.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cchol/channel.hpp"
#include "cchol/channel_io.hpp"
#include "cchol/cholesky.hpp"
#include "cchol/dilation.hpp"
#include "cchol/errors.hpp"
#include "cchol/random_channel.hpp"
#include "cchol/report.hpp"

namespace {

using namespace cchol;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotCp = 2;
constexpr int kExitNotTp = 3;
constexpr int kExitResidual = 4;

struct Options {
    std::string path;
    std::string output;
    double tol = -1.0; // < 0: use per-command default
    bool json = false;
    bool unitary = false;
    bool corrupt = false;
    int samples = 5;
    std::uint64_t seed = 0;
    Index dim_in = 2;
    Index dim_out = 2;
    Index env = 1;
    std::string representation = "kraus";
};

class Timer {
  public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

void emit(const Report& report, bool json) {
    std::cout << (json ? render_json(report) : render_text(report));
}

const char* representation_name(Representation r) {
    return r == Representation::entries ? "entries" : "kraus";
}

// Fills the CP/TP/Hermiticity section. Returns the CP verdict.
bool fill_verdicts(Report& report, const ChannelFile& file, double cp_tol) {
    report.dim_in = file.dim_in;
    report.dim_out = file.dim_out;
    report.representation = representation_name(file.representation);

    const double herm = hermiticity_residual(file.channel);
    report.hermiticity_residual = herm;
    report.hermitian_preserving = herm <= Tolerances{}.herm_tol;

    bool cp = false;
    if (*report.hermitian_preserving) {
        const CpVerdict verdict = is_cp(file.channel, cp_tol);
        report.min_choi_eigenvalue = verdict.min_eigenvalue;
        cp = verdict.completely_positive;
    } else {
        // Not Hermiticity-preserving, hence not CP; report the spectrum of
        // the Hermitian part for diagnostics.
        const BlockMatrix choi = choi_matrix(file.channel);
        const EigenDecomposition eig = hermitian_eig(hermitize(choi.data));
        report.min_choi_eigenvalue = eig.eigenvalues.minCoeff();
    }
    report.cp = cp;

    const double tp_res = tp_residual(file.channel);
    report.tp_residual = tp_res;
    report.tp = tp_res <= cp_tol;
    return cp;
}

int cmd_inspect(const Options& opt) {
    const Timer timer;
    const ChannelFile file = read_channel_file(opt.path);
    const double cp_tol = opt.tol < 0 ? 1e-10 : opt.tol;

    Report report;
    report.command = "inspect";
    const bool cp = fill_verdicts(report, file, cp_tol);
    report.elapsed_ms = timer.elapsed_ms();
    emit(report, opt.json);
    return cp ? kExitOk : kExitNotCp;
}

int cmd_decompose(const Options& opt) {
    const Timer timer;
    const ChannelFile file = read_channel_file(opt.path);
    const double cp_tol = opt.tol < 0 ? 1e-10 : opt.tol;

    Report report;
    report.command = "decompose";
    if (!fill_verdicts(report, file, cp_tol)) {
        report.elapsed_ms = timer.elapsed_ms();
        emit(report, opt.json);
        std::cerr << "decompose: channel is not CP (min Choi eigenvalue "
                  << *report.min_choi_eigenvalue << ")\n";
        return kExitNotCp;
    }

    const BlockMatrix choi = choi_matrix(file.channel);
    const CholeskyFactors factors = choi_cholesky(choi);
    const BlockMatrix rebuilt = reconstruct(factors);
    const double scale = choi.data.norm();
    const double residual = (rebuilt.data - choi.data).norm();
    report.reconstruction_residual = scale > 0 ? residual / scale : residual;

    for (Index i = 0; i < factors.n_blocks; ++i)
        report.d_block_norms.push_back(factors.D(i).norm());
    for (Index i = 0; i < factors.n_blocks; ++i)
        for (Index j = 0; j < factors.n_blocks; ++j)
            report.l_block_norms.push_back(factors.L(i, j).norm());

    if (!opt.output.empty()) write_factors_file(opt.output, factors);
    report.elapsed_ms = timer.elapsed_ms();
    emit(report, opt.json);
    return kExitOk;
}

int cmd_dilate(const Options& opt) {
    const Timer timer;
    const ChannelFile file = read_channel_file(opt.path);
    const double cp_tol = opt.tol < 0 ? 1e-10 : opt.tol;

    Report report;
    report.command = "dilate";
    if (!fill_verdicts(report, file, cp_tol)) {
        report.elapsed_ms = timer.elapsed_ms();
        emit(report, opt.json);
        std::cerr << "dilate: channel is not CP (min Choi eigenvalue "
                  << *report.min_choi_eigenvalue << ")\n";
        return kExitNotCp;
    }

    const Resolution res = resolution(file.channel);
    const DilationOperator dil = dilation_operator(res);
    report.isometry_residual = dil.isometry_residual;
    report.sigma_max = dil.sigma_max;
    report.is_isometry = dil.is_isometry;
    report.is_contraction = dil.is_contraction;

    std::optional<HalmosUnitary> unitary;
    if (opt.unitary) {
        unitary = halmos_unitary(dil); // throws NotIsometryError if not TP
        report.unitarity_residual = unitary->unitarity_residual;
    }

    if (!opt.output.empty())
        write_dilation_file(opt.output, dil, unitary ? &*unitary : nullptr);
    report.elapsed_ms = timer.elapsed_ms();
    emit(report, opt.json);
    return kExitOk;
}

int cmd_roundtrip(const Options& opt) {
    const Timer timer;
    const ChannelFile file = read_channel_file(opt.path);
    const double gate = opt.tol < 0 ? 1e-8 : opt.tol;

    Report report;
    report.command = "roundtrip";
    if (!fill_verdicts(report, file, 1e-10)) {
        report.elapsed_ms = timer.elapsed_ms();
        emit(report, opt.json);
        std::cerr << "roundtrip: channel is not CP (min Choi eigenvalue "
                  << *report.min_choi_eigenvalue << ")\n";
        return kExitNotCp;
    }

    const ChannelSpec& ch = file.channel;
    DilationOperator dil = dilation_operator(resolution(ch));
    if (opt.corrupt) dil.v(0, 0) += 1e-3; // negative-control test mode

    double worst = 0.0;
    const auto check = [&](const ComplexMatrix& s) {
        const double r =
            (reconstruct_channel(dil, s) - apply_channel(ch, s)).norm();
        worst = std::max(worst, r);
    };
    for (Index i = 0; i < ch.dim_in; ++i)
        for (Index j = 0; j < ch.dim_in; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(ch.dim_in, ch.dim_in);
            e(i, j) = 1.0;
            check(e);
        }
    GaussianSource g(opt.seed);
    for (int k = 0; k < opt.samples; ++k)
        check(random_density(g, ch.dim_in));

    report.roundtrip_residual = worst;
    report.samples = opt.samples;
    report.isometry_residual = dil.isometry_residual;
    report.sigma_max = dil.sigma_max;
    report.is_isometry = dil.is_isometry;
    report.is_contraction = dil.is_contraction;
    report.elapsed_ms = timer.elapsed_ms();
    emit(report, opt.json);
    return worst <= gate ? kExitOk : kExitResidual;
}

int cmd_random(const Options& opt) {
    const Timer timer;
    if (opt.output.empty())
        throw IoError("random: --output is required");

    const StinespringChannel generated =
        random_cptp_channel(opt.seed, opt.dim_in, opt.dim_out, opt.env);

    ChannelFile file = opt.representation == "entries"
                           ? make_entries_file(generated.channel)
                           : make_kraus_file(generated.kraus);
    write_channel_file(opt.output, file);

    // Self-check: the generator must always produce a CPTP channel.
    Report report;
    report.command = "random";
    fill_verdicts(report, file, 1e-10);
    report.elapsed_ms = timer.elapsed_ms();
    emit(report, opt.json);
    if (!*report.cp || !*report.tp) {
        std::cerr << "random: generated channel failed the CPTP self-check\n";
        return kExitError;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical dilations of completely positive maps via the "
                 "Choi-Cholesky decomposition"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--tol", opt.tol, "Tolerance override (per-command default)");
    app.add_flag("--json", opt.json, "Structured JSON output");
    app.add_option("--seed", opt.seed, "Random seed (default 0)");
    app.add_option("--output", opt.output, "Output file path");

    CLI::App* inspect =
        app.add_subcommand("inspect", "Verify CP/TP against the Choi criterion");
    inspect->add_option("path", opt.path, "Channel file")->required();

    CLI::App* decompose = app.add_subcommand(
        "decompose", "Bi-partite Cholesky factors of the Choi matrix");
    decompose->add_option("path", opt.path, "Channel file")->required();

    CLI::App* dilate =
        app.add_subcommand("dilate", "Dilation operator V (and Halmos unitary)");
    dilate->add_option("path", opt.path, "Channel file")->required();
    dilate->add_flag("--unitary", opt.unitary,
                     "Also build the Halmos unitary (requires TP)");

    CLI::App* roundtrip = app.add_subcommand(
        "roundtrip", "Verify Phi(s) = Psi(V s V*) on basis elements and "
                     "random states");
    roundtrip->add_option("path", opt.path, "Channel file")->required();
    roundtrip->add_option("--samples", opt.samples, "Random states (default 5)")
        ->check(CLI::NonNegativeNumber);
    roundtrip->add_flag("--corrupt", opt.corrupt)->group(""); // test mode

    CLI::App* random = app.add_subcommand(
        "random", "Generate a seeded CPTP channel in Stinespring form");
    random->add_option("--dim-in", opt.dim_in, "Input dimension N")->required();
    random->add_option("--dim-out", opt.dim_out, "Output dimension d")->required();
    random->add_option("--env", opt.env, "Environment dimension (default 1)");
    random->add_option("--representation", opt.representation,
                       "Output representation (default kraus)")
        ->check(CLI::IsMember({"kraus", "entries"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*inspect) return cmd_inspect(opt);
        if (*decompose) return cmd_decompose(opt);
        if (*dilate) return cmd_dilate(opt);
        if (*roundtrip) return cmd_roundtrip(opt);
        if (*random) return cmd_random(opt);
    } catch (const NotCpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotCp;
    } catch (const NotTpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotTp;
    } catch (const NotIsometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotTp;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
