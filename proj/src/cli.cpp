#include "dimerss/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "dimerss/closed_form.hpp"
#include "dimerss/entanglement.hpp"
#include "dimerss/parallel.hpp"
#include "dimerss/robustness.hpp"
#include "dimerss/steady_state.hpp"
#include "dimerss/stochastic.hpp"
#include "dimerss/sweep.hpp"

namespace dimerss {

namespace {

struct Options {
    std::string mode;  // empty: common, or both for validate
    double j{2.0};
    double alpha{1.0};
    double eta{0.1};
    double gamma{1.0};
    std::string out;
    std::uint64_t seed{20110502};
    double dt{0.005};
    double t_end{40.0};
    int n_traj{2000};
    unsigned threads{0};
    bool cross_check{false};

    // sweep / delta
    double alpha_min{0.0}, alpha_max{3.0};
    int alpha_count{50};
    double eta_min{0.0}, eta_max{0.5};
    int eta_count{50};
    std::string outputs{"all"};

    // snr
    std::string j_list{"0.5,1,1.5,2,3,4"};

    // validate
    int samples{500};
    double tol{1e-9};
};

DriveMode single_mode(const Options& o) {
    return o.mode.empty() ? DriveMode::Common : parse_drive_mode(o.mode);
}

std::vector<DriveMode> modes_of(const Options& o, const char* fallback) {
    const std::string text = o.mode.empty() ? fallback : o.mode;
    if (text == "both") return {DriveMode::Common, DriveMode::Independent};
    return {parse_drive_mode(text)};
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw InvalidParameter("bad number '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw InvalidParameter("empty list");
    return values;
}

int cmd_steady(const Options& o, std::ostream& os) {
    const ModelParams p{o.alpha, o.eta, o.j, o.gamma, single_mode(o)};
    p.validate();
    DensityMatrix rho;
    std::string source = "closed-form";
    try {
        rho = closed_form_state(p);
    } catch (const SingularDenominator&) {
        rho = solve_steady(p).rho;
        source = "numeric";
    }
    const SteadyStateReport numeric = solve_steady(p);

    os << "mode=" << to_string(p.mode) << " alpha=" << format_double(p.alpha)
       << " eta=" << format_double(p.eta) << " j=" << format_double(p.j)
       << " gamma=" << format_double(p.gamma) << " source=" << source << '\n';
    os << "rho (re im per entry, basis |00>,|01>,|10>,|11>):\n";
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            os << (c ? "  " : "") << format_double(rho(r, c).real()) << ' '
               << format_double(rho(r, c).imag());
        }
        os << '\n';
    }
    const auto values = rho.parameters().as_array();
    for (std::size_t k = 0; k < values.size(); ++k) {
        os << DensityParameters::names[k] << '=' << format_double(values[k]) << '\n';
    }
    const ConcurrenceResult cr = concurrence(rho);
    os << "concurrence=" << format_double(cr.c) << '\n';
    os << "purity=" << format_double(rho.purity()) << '\n';
    os << "numeric_residual=" << format_double(numeric.residual) << '\n';
    os << "numeric_nullity=" << numeric.nullity << '\n';
    os << "closed_form_vs_numeric=" << format_double(frobenius_distance(rho, numeric.rho)) << '\n';
    return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& os, std::ostream& err, bool delta_only) {
    SweepConfig cfg;
    cfg.mode = single_mode(o);
    cfg.j = o.j;
    cfg.gamma = o.gamma;
    cfg.alpha = {o.alpha_min, o.alpha_max, o.alpha_count};
    cfg.eta = {o.eta_min, o.eta_max, o.eta_count};
    cfg.outputs = delta_only ? OutputSelection{false, true, false, false}
                             : OutputSelection::parse(o.outputs);
    cfg.cross_check = o.cross_check;
    cfg.threads = o.threads;
    const std::vector<CsvRow> rows = run_sweep(cfg);

    write_csv_header(os);
    int failures = 0;
    for (const CsvRow& row : rows) {
        write_csv_row(os, row);
        if (row.error) {
            ++failures;
            err << "error at alpha=" << format_double(row.alpha) << " eta=" << format_double(row.eta)
                << ": " << *row.error << '\n';
        }
    }
    if (failures > 0) return kExitNumerical;
    if (cfg.cross_check) {
        const bool mismatch = std::any_of(rows.begin(), rows.end(), [&](const CsvRow& r) {
            return r.residual && *r.residual >= o.tol;
        });
        if (mismatch) {
            err << "cross-check residual exceeds " << format_double(o.tol) << '\n';
            return kExitMismatch;
        }
    }
    return kExitOk;
}

int cmd_snr(const Options& o, std::ostream& os, std::ostream& err) {
    const std::vector<double> js = parse_list(o.j_list);
    os << "mode,j,alpha_star,c_star,eta_star,snr\n";
    int failures = 0;
    for (DriveMode mode : modes_of(o, "common")) {
        for (const SnrPoint& pt : snr_curve(js, mode, SearchProtocol{}, resolve_threads(o.threads))) {
            os << to_string(pt.mode) << ',' << format_double(pt.j);
            if (pt.error) {
                os << ",nan,nan,nan,nan\n";
                err << "J=" << format_double(pt.j) << ": " << *pt.error << '\n';
                ++failures;
                continue;
            }
            os << ',' << format_double(pt.alpha_star) << ',' << format_double(pt.c_star) << ','
               << format_double(pt.eta_star) << ',' << format_double(pt.snr) << '\n';
        }
    }
    return failures ? kExitNumerical : kExitOk;
}

int cmd_validate(const Options& o, std::ostream& os) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> alpha(0.0, 4.0), eta(0.0, 1.0), j(0.0, 4.0);
    double worst = 0.0;
    for (DriveMode mode : modes_of(o, "both")) {
        double mode_worst = 0.0;
        for (int k = 0; k < o.samples; ++k) {
            const ModelParams p{alpha(rng), eta(rng), j(rng), 1.0, mode};
            const double d = frobenius_distance(closed_form_state(p), solve_steady(p).rho);
            mode_worst = std::max(mode_worst, d);
        }
        os << "mode=" << to_string(mode) << " samples=" << o.samples
           << " max_frobenius_error=" << format_double(mode_worst) << '\n';
        worst = std::max(worst, mode_worst);
    }
    const bool ok = worst < o.tol;
    os << (ok ? "PASS" : "FAIL") << " max_frobenius_error=" << format_double(worst)
       << " tol=" << format_double(o.tol) << '\n';
    return ok ? kExitOk : kExitMismatch;
}

int cmd_traj(const Options& o, std::ostream& os) {
    TrajectoryConfig cfg;
    cfg.params = ModelParams{o.alpha, o.eta, o.j, o.gamma, single_mode(o)};
    cfg.dt = o.dt;
    cfg.t_end = o.t_end;
    cfg.n_traj = o.n_traj;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    const EnsembleResult ens = run_ensemble(cfg);
    const DensityMatrix reference = closed_form_state(cfg.params);
    const double distance = frobenius_distance(ens.rho_mean, reference);
    const double tolerance = std::max(3.0 * ens.stderr_frobenius, 5.0 * cfg.dt);

    os << "mode=" << to_string(cfg.params.mode) << " n_traj=" << ens.n_traj
       << " dt=" << format_double(cfg.dt) << " t_end=" << format_double(ens.t_end) << '\n';
    os << "frobenius_distance=" << format_double(distance) << '\n';
    os << "stderr=" << format_double(ens.stderr_frobenius) << '\n';
    os << "tolerance=" << format_double(tolerance) << '\n';
    os << "concurrence_ensemble=" << format_double(concurrence(ens.rho_mean).c) << '\n';
    os << "concurrence_steady=" << format_double(concurrence(reference).c) << '\n';
    os << "max_trace_defect=" << format_double(ens.max_trace_defect) << '\n';
    const bool ok = distance < tolerance;
    os << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Steady-state entanglement of two driven, damped, exchange-coupled qubits"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--mode", o.mode, "common | independent (snr also accepts both)");
    app.add_option("--j", o.j, "exchange coupling J (units of gamma)");
    app.add_option("--alpha", o.alpha, "drive amplitude (units of gamma)");
    app.add_option("--eta", o.eta, "noise strength (units of gamma)")->check(CLI::NonNegativeNumber);
    app.add_option("--gamma", o.gamma, "decay rate")->check(CLI::PositiveNumber);
    app.add_option("--out", o.out, "output path (default stdout)");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--dt", o.dt, "trajectory time step")->check(CLI::PositiveNumber);
    app.add_option("--t-end", o.t_end, "trajectory final time")->check(CLI::NonNegativeNumber);
    app.add_option("--n-traj", o.n_traj, "number of trajectories")->check(CLI::PositiveNumber);
    app.add_option("--threads", o.threads, "worker threads (default DIMERSS_THREADS or 1)");
    app.add_flag("--cross-check", o.cross_check, "compare closed form with the numeric solver");
    app.add_option("--tol", o.tol, "mismatch tolerance for validate and --cross-check");

    auto* steady = app.add_subcommand("steady", "steady state at one parameter point");
    auto* sweep = app.add_subcommand("sweep", "(alpha, eta) grid to CSV");
    auto* delta_cmd = app.add_subcommand("delta", "(alpha, eta) grid of the noise-induced gain to CSV");
    for (auto* sub : {sweep, delta_cmd}) {
        sub->add_option("--alpha-min", o.alpha_min);
        sub->add_option("--alpha-max", o.alpha_max);
        sub->add_option("--alpha-count", o.alpha_count)->check(CLI::PositiveNumber);
        sub->add_option("--eta-min", o.eta_min)->check(CLI::NonNegativeNumber);
        sub->add_option("--eta-max", o.eta_max)->check(CLI::NonNegativeNumber);
        sub->add_option("--eta-count", o.eta_count)->check(CLI::PositiveNumber);
    }
    sweep->add_option("--outputs", o.outputs, "comma list of concurrence,delta,purity,populations");
    auto* snr = app.add_subcommand("snr", "SNR figure of merit vs J");
    snr->add_option("--j-list", o.j_list, "comma-separated couplings");
    auto* validate = app.add_subcommand("validate", "closed form vs numeric solver on random points");
    validate->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    auto* traj = app.add_subcommand("traj", "Monte Carlo ensemble vs steady state");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            err << "error: cannot open " << o.out << '\n';
            return kExitUsage;
        }
    }
    std::ostream& os = o.out.empty() ? out : file;

    try {
        if (*steady) return cmd_steady(o, os);
        if (*sweep) return cmd_sweep(o, os, err, false);
        if (*delta_cmd) return cmd_sweep(o, os, err, true);
        if (*snr) return cmd_snr(o, os, err);
        if (*validate) return cmd_validate(o, os);
        if (*traj) return cmd_traj(o, os);
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace dimerss
