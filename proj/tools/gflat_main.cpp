// gflat command-line front-end.
//
// Subcommands compute lattice spectra, time evolution of photon-number
// observables, two-mode fidelities, two-photon correlation maps,
// spectral weights, semi-infinite-limit comparisons, and a self-check
// against the brute-force validators.  All configuration is passed by
// flags (no environment variables), every numeric field is serialized
// with %.17g, and identical invocations produce byte-identical files.
//
// Exit codes: 0 success, 2 usage error, 3 internal conservation-check
// failure, 1 unexpected internal error or failed verification.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gflat/io.hpp"
#include "gflat/limits.hpp"
#include "gflat/oracle.hpp"
#include "gflat/propagator.hpp"
#include "gflat/spectral.hpp"
#include "gflat/states.hpp"

namespace {

using namespace gflat;

struct conservation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int size = 0;
    std::string input;
    double t_start = 0.0;
    std::optional<double> t_max;
    int steps = 101;
    std::string times;
    bool times_in_revival_units = false;
    std::string out = "-";
    std::string format = "csv";
    bool abs_column = false;
    int waveguide = 0;
    double time = 0.0;
    Tolerances tol;
};

io::Format parse_format(const std::string& f) {
    if (f == "csv") return io::Format::csv;
    if (f == "json") return io::Format::json;
    throw std::invalid_argument("--format must be csv or json");
}

void emit(const io::Dataset& d, const Options& opt) {
    const io::Format format = parse_format(opt.format);
    if (opt.out == "-") {
        io::write(std::cout, d, format);
        return;
    }
    std::ofstream os(opt.out, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file '" + opt.out + "'");
    io::write(os, d, format);
    if (!os) throw std::runtime_error("failed writing output file '" + opt.out + "'");
}

void check_size(const Options& opt) {
    if (opt.size < 1) throw std::invalid_argument("--size must be a positive lattice size");
}

// Times from --times (explicit list) or the --t-start/--t-max/--steps
// grid; with --times-in-revival-units every value is a multiple of
// pi / (10 lambda_min).
std::vector<double> resolve_times(const Options& opt, const SpectralDecomposition& decomp) {
    std::vector<double> times;
    if (!opt.times.empty()) {
        times = io::parse_time_list(opt.times);
    } else {
        if (!opt.t_max) throw std::invalid_argument("either --times or --t-max is required");
        TimeGrid grid{opt.t_start, *opt.t_max, opt.steps};
        times = grid.times();
    }
    if (opt.times_in_revival_units) {
        const double unit = M_PI / (10.0 * min_positive_eigenvalue(decomp));
        for (double& t : times) t *= unit;
    }
    return times;
}

void add_common_metadata(io::Dataset& d, const char* command, const Options& opt) {
    d.meta_str("artifact_version", io::kArtifactVersion);
    d.meta_str("command", command);
    d.meta_int("size", opt.size);
    d.meta_num("tol_eigen", opt.tol.eigen);
    d.meta_num("tol_unitarity", opt.tol.unitarity);
}

int cmd_spectrum(const Options& opt) {
    check_size(opt);
    const auto decomp = eigen_decompose(LatticeSpec{opt.size}, opt.tol);
    io::Dataset d;
    add_common_metadata(d, "spectrum", opt);
    if (opt.abs_column) {
        d.columns = {"index", "lambda", "abs_lambda"};
        for (int j = 0; j < opt.size; ++j)
            d.add_row({double(j), decomp.eigenvalues[j], std::abs(decomp.eigenvalues[j])});
    } else {
        d.columns = {"index", "lambda"};
        for (int j = 0; j < opt.size; ++j) d.add_row({double(j), decomp.eigenvalues[j]});
    }
    emit(d, opt);
    return 0;
}

std::vector<double> mean_photon_for(const InputState& state, const Propagator& u) {
    if (std::holds_alternative<FockAt>(state)) {
        const auto& s = std::get<FockAt>(state);
        return mean_photon_fock(u, s.waveguide, s.photons);
    }
    if (std::holds_alternative<SinglePhotonSuperposition>(state)) {
        const auto& s = std::get<SinglePhotonSuperposition>(state);
        return mean_photon_superposition(u, s.amplitudes);
    }
    if (std::holds_alternative<TwoPhotonProduct>(state)) {
        const auto& s = std::get<TwoPhotonProduct>(state);
        const int idx[2] = {s.j, s.k};
        return mean_photon_product(u, idx);
    }
    const auto& s = std::get<Noon>(state);
    return mean_photon_noon(u, s.j, s.k, s.photons);
}

int cmd_evolve(const Options& opt) {
    check_size(opt);
    if (opt.input.empty()) throw std::invalid_argument("--input is required");
    const InputState state = io::parse_input_state(opt.input, opt.size);
    const auto decomp = eigen_decompose(LatticeSpec{opt.size}, opt.tol);
    const auto times = resolve_times(opt, decomp);
    const double expected = photon_total(state);

    io::Dataset d;
    add_common_metadata(d, "evolve", opt);
    d.meta_str("input", opt.input);
    d.columns = {"t", "waveguide", "mean_photon"};
    for_each_propagator(decomp, times, [&](const Propagator& u) {
        const auto mean = mean_photon_for(state, u);
        double total = 0.0;
        for (int q = 0; q < opt.size; ++q) {
            d.add_row({u.time, double(q), mean[q]});
            total += mean[q];
        }
        if (std::abs(total - expected) > opt.tol.conservation * std::max(1.0, expected)) {
            std::ostringstream msg;
            msg << "photon-number conservation violated at t=" << u.time << ": total " << total
                << " vs expected " << expected;
            throw conservation_error(msg.str());
        }
    });
    emit(d, opt);
    return 0;
}

int cmd_fidelity(const Options& opt) {
    check_size(opt);
    if (opt.input.empty()) throw std::invalid_argument("--input is required");
    const InputState state = io::parse_input_state(opt.input, opt.size);
    if (!std::holds_alternative<SinglePhotonSuperposition>(state))
        throw std::invalid_argument("fidelity requires a superpos:j:k:alpha input");
    const auto& sup = std::get<SinglePhotonSuperposition>(state);
    // Recover the two occupied modes from the descriptor-built amplitudes.
    int j = -1, k = -1;
    cdouble alpha, beta;
    for (int q = 0; q < opt.size; ++q) {
        if (sup.amplitudes[q] == cdouble{}) continue;
        if (j < 0) {
            j = q;
            alpha = sup.amplitudes[q];
        } else {
            k = q;
            beta = sup.amplitudes[q];
        }
    }
    if (k < 0) throw std::invalid_argument("fidelity requires two occupied waveguides");

    const auto decomp = eigen_decompose(LatticeSpec{opt.size}, opt.tol);
    const auto times = resolve_times(opt, decomp);
    const auto fid = fidelity_two_mode(decomp, times, j, k, alpha, beta);

    io::Dataset d;
    add_common_metadata(d, "fidelity", opt);
    d.meta_str("input", opt.input);
    d.columns = {"t", "fidelity"};
    for (std::size_t i = 0; i < times.size(); ++i) d.add_row({times[i], fid[i]});
    emit(d, opt);
    return 0;
}

int cmd_correlation(const Options& opt) {
    check_size(opt);
    if (opt.input.empty()) throw std::invalid_argument("--input is required");
    const InputState state = io::parse_input_state(opt.input, opt.size);
    const bool is_product = std::holds_alternative<TwoPhotonProduct>(state);
    if (!is_product && !std::holds_alternative<Noon>(state))
        throw std::invalid_argument("correlation requires a product:j:k or noon:j:k:phi input");
    const auto decomp = eigen_decompose(LatticeSpec{opt.size}, opt.tol);
    const auto times = resolve_times(opt, decomp);

    io::Dataset d;
    add_common_metadata(d, "correlation", opt);
    d.meta_str("input", opt.input);
    d.columns = {"t", "p", "q", "gamma"};
    for_each_propagator(decomp, times, [&](const Propagator& u) {
        CorrelationMap g;
        if (is_product) {
            const auto& s = std::get<TwoPhotonProduct>(state);
            g = correlation_product(u, s.j, s.k);
        } else {
            const auto& s = std::get<Noon>(state);
            g = correlation_noon(u, s.j, s.k, s.photons, s.phase);
        }
        if (std::abs(g.sum() - 2.0) > opt.tol.conservation) {
            std::ostringstream msg;
            msg << "two-photon sum rule violated at t=" << u.time << ": sum " << g.sum();
            throw conservation_error(msg.str());
        }
        for (int p = 0; p < opt.size; ++p)
            for (int q = 0; q < opt.size; ++q) d.add_row({u.time, double(p), double(q), g(p, q)});
    });
    emit(d, opt);
    return 0;
}

int cmd_weights(const Options& opt) {
    check_size(opt);
    const auto decomp = eigen_decompose(LatticeSpec{opt.size}, opt.tol);
    const auto w = spectral_weights(decomp, opt.waveguide);

    io::Dataset d;
    add_common_metadata(d, "weights", opt);
    d.meta_int("waveguide", opt.waveguide);
    d.columns = {"eigen_index", "weight"};
    double sum = 0.0;
    for (int l = 0; l < opt.size; ++l) {
        d.add_row({double(l), w[l]});
        sum += w[l];
    }
    d.summary_num("weight_sum", sum);
    emit(d, opt);
    return 0;
}

int cmd_compare_limit(const Options& opt) {
    check_size(opt);
    const auto decomp = eigen_decompose(LatticeSpec{opt.size}, opt.tol);
    const auto cmp = compare_finite_infinite(decomp, opt.waveguide, opt.time);

    io::Dataset d;
    add_common_metadata(d, "compare-limit", opt);
    d.meta_int("input_waveguide", opt.waveguide);
    d.meta_num("time", opt.time);
    d.columns = {"waveguide", "finite", "infinite", "abs_diff"};
    for (const auto& r : cmp.records)
        d.add_row({double(r.waveguide), r.finite, r.infinite, r.abs_diff});
    d.summary_num("max_abs_diff", cmp.max_abs_diff);
    d.summary_num("edge_occupation_last10", cmp.edge_occupation);
    emit(d, opt);
    return 0;
}

struct VerifyReport {
    int checks = 0;
    int failures = 0;

    void record(bool pass, const std::string& label, double measured, double tolerance) {
        ++checks;
        if (!pass) ++failures;
        std::cout << (pass ? "PASS " : "FAIL ") << label
                  << " measured=" << io::format_number(measured)
                  << " tol=" << io::format_number(tolerance) << "\n";
    }
};

int cmd_verify(const Options& opt) {
    check_size(opt);
    VerifyReport report;
    for (int n = 1; n <= opt.size; ++n) {
        const LatticeSpec spec{n};
        const auto m = coupling_matrix(spec);
        const auto decomp = eigen_decompose(spec, opt.tol);

        const auto bisected = oracle::bisect_eigenvalues(m);
        double eig_diff = 0.0;
        for (int j = 0; j < n; ++j)
            eig_diff = std::max(eig_diff, std::abs(decomp.eigenvalues[j] - bisected[j]));
        report.record(eig_diff <= opt.tol.eigen, "spectrum-vs-bisection N=" + std::to_string(n),
                      eig_diff, opt.tol.eigen);

        double defect = 0.0;
        double expm_diff = 0.0;
        for (double t : {0.9, 2.7}) {
            const auto u = propagator_at(decomp, t);
            defect = std::max(defect, unitarity_defect(u.u));
            if (n <= oracle::kDenseCap)
                expm_diff = std::max(expm_diff, max_abs_diff(u.u, oracle::dense_expm(m, t)));
        }
        report.record(defect <= opt.tol.unitarity, "unitarity N=" + std::to_string(n), defect,
                      opt.tol.unitarity);
        if (n <= oracle::kDenseCap)
            report.record(expm_diff <= 1e-9, "propagator-vs-expm N=" + std::to_string(n),
                          expm_diff, 1e-9);

        if (n >= 2) {
            const auto u = propagator_at(decomp, 1.1);
            const auto gp = correlation_product(u, 0, 1);
            const auto gn = correlation_noon(u, 0, 1, 2, 0.4);
            const double worst = std::max(std::abs(gp.sum() - 2.0), std::abs(gn.sum() - 2.0));
            report.record(worst <= opt.tol.conservation,
                          "correlation-sum-rule N=" + std::to_string(n), worst,
                          opt.tol.conservation);

            const auto mean = mean_photon_fock(u, 0, 2);
            double total = 0.0;
            for (double x : mean) total += x;
            report.record(std::abs(total - 2.0) <= opt.tol.conservation,
                          "photon-conservation N=" + std::to_string(n), std::abs(total - 2.0),
                          opt.tol.conservation);
        }
    }
    std::cout << (report.failures == 0 ? "VERIFY PASS" : "VERIFY FAIL") << " (" << report.checks
              << " checks, " << report.failures << " failures)\n";
    return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gflat: exact dynamics of finite Glauber-Fock photonic lattices.\n"
        "Spectra, propagators, photon-number evolution, fidelities and\n"
        "two-photon correlations, with machine-readable CSV/JSON output."};
    app.require_subcommand(1);

    Options opt;

    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "Output path, '-' for stdout (default)");
        sub->add_option("--format", opt.format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_time_flags = [&](CLI::App* sub) {
        sub->add_option("--t-start", opt.t_start, "Grid start time (default 0)");
        sub->add_option("--t-max", opt.t_max, "Grid end time");
        sub->add_option("--steps", opt.steps, "Grid sample count (default 101)")
            ->check(CLI::Range(2, 100000000));
        sub->add_option("--times", opt.times,
                        "Explicit comma-separated times (overrides the grid)");
        sub->add_flag("--times-in-revival-units", opt.times_in_revival_units,
                      "Interpret times as multiples of pi / (10 lambda_min)");
    };
    auto add_tol_flags = [&](CLI::App* sub) {
        sub->add_option("--tol-eigen", opt.tol.eigen, "Eigenvalue agreement tolerance");
        sub->add_option("--tol-unitarity", opt.tol.unitarity, "Unitarity defect tolerance");
        sub->add_option("--tol-conservation", opt.tol.conservation,
                        "Photon-number conservation tolerance");
    };

    auto* spectrum =
        app.add_subcommand("spectrum", "Eigenvalues of the coupling matrix, ascending");
    spectrum->add_option("--size", opt.size, "Lattice size N")->required();
    spectrum->add_flag("--abs", opt.abs_column, "Add an |lambda| column");
    add_output_flags(spectrum);
    add_tol_flags(spectrum);

    auto* evolve = app.add_subcommand("evolve", "Mean photon number per waveguide over time");
    evolve->add_option("--size", opt.size, "Lattice size N")->required();
    evolve->add_option("--input", opt.input,
                       "Input state: fock:p:m | superpos:j:k:alpha | product:j:k | noon:j:k:phi")
        ->required();
    add_time_flags(evolve);
    add_output_flags(evolve);
    add_tol_flags(evolve);

    auto* fidelity = app.add_subcommand(
        "fidelity", "Overlap of the evolved two-mode state with itself at t=0");
    fidelity->add_option("--size", opt.size, "Lattice size N")->required();
    fidelity->add_option("--input", opt.input, "Input state: superpos:j:k:alpha")->required();
    add_time_flags(fidelity);
    add_output_flags(fidelity);
    add_tol_flags(fidelity);

    auto* correlation = app.add_subcommand("correlation", "Two-photon coincidence maps Gamma_pq");
    correlation->add_option("--size", opt.size, "Lattice size N")->required();
    correlation->add_option("--input", opt.input, "Input state: product:j:k | noon:j:k:phi")
        ->required();
    add_time_flags(correlation);
    add_output_flags(correlation);
    add_tol_flags(correlation);

    auto* weights = app.add_subcommand("weights", "Spectral weights of one waveguide");
    weights->add_option("--size", opt.size, "Lattice size N")->required();
    weights->add_option("--waveguide", opt.waveguide, "Waveguide index j")->required();
    add_output_flags(weights);
    add_tol_flags(weights);

    auto* compare = app.add_subcommand(
        "compare-limit", "Finite lattice vs semi-infinite closed form at one time");
    compare->add_option("--size", opt.size, "Lattice size N")->required();
    compare->add_option("--waveguide", opt.waveguide, "Input waveguide p")->required();
    compare->add_option("--time", opt.time, "Evolution time t")->required();
    add_output_flags(compare);
    add_tol_flags(compare);

    auto* verify =
        app.add_subcommand("verify", "Cross-check fast paths against brute-force validators");
    verify->add_option("--size", opt.size, "Largest lattice size to check")->required();
    add_tol_flags(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (evolve->parsed()) return cmd_evolve(opt);
        if (fidelity->parsed()) return cmd_fidelity(opt);
        if (correlation->parsed()) return cmd_correlation(opt);
        if (weights->parsed()) return cmd_weights(opt);
        if (compare->parsed()) return cmd_compare_limit(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const conservation_error& e) {
        std::cerr << "gflat: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "gflat: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "gflat: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gflat: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
