#include "dimerss/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "dimerss/closed_form.hpp"
#include "dimerss/entanglement.hpp"
#include "dimerss/parallel.hpp"
#include "dimerss/steady_state.hpp"

namespace dimerss {

void GridRange::validate(const char* name) const {
    if (count < 1) throw InvalidParameter(std::string(name) + ": count must be >= 1");
    if (!(min <= max)) throw InvalidParameter(std::string(name) + ": min must not exceed max");
    if (!std::isfinite(min) || !std::isfinite(max)) {
        throw InvalidParameter(std::string(name) + ": bounds must be finite");
    }
}

OutputSelection OutputSelection::parse(const std::string& comma_list) {
    OutputSelection sel{false, false, false, false};
    std::stringstream ss(comma_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "concurrence") sel.concurrence = true;
        else if (item == "delta") sel.delta = true;
        else if (item == "purity") sel.purity = true;
        else if (item == "populations") sel.populations = true;
        else if (item == "all") sel = OutputSelection{};
        else throw InvalidParameter("unknown output '" + item + "'");
    }
    return sel;
}

void SweepConfig::validate() const {
    alpha.validate("alpha");
    eta.validate("eta");
    if (!(gamma > 0.0)) throw InvalidParameter("gamma must be positive");
    if (eta.min < 0.0) throw InvalidParameter("eta must be non-negative");
    if (!std::isfinite(j)) throw InvalidParameter("j must be finite");
}

namespace {

DensityMatrix steady_state_for(const ModelParams& p) {
    try {
        return closed_form_state(p);
    } catch (const SingularDenominator&) {
        return solve_steady(p).rho;
    }
}

CsvRow evaluate_point(const SweepConfig& cfg, double alpha, double eta) {
    CsvRow row;
    row.mode = cfg.mode;
    row.j = cfg.j;
    row.gamma = cfg.gamma;
    row.alpha = alpha;
    row.eta = eta;
    try {
        const ModelParams p{alpha, eta, cfg.j, cfg.gamma, cfg.mode};
        const DensityMatrix rho = steady_state_for(p);
        const double c = concurrence(rho).c;
        if (cfg.outputs.concurrence) row.concurrence = c;
        if (cfg.outputs.delta) {
            const ModelParams noiseless{alpha, 0.0, cfg.j, cfg.gamma, cfg.mode};
            const double gain = eta > 0.0 ? c - concurrence(steady_state_for(noiseless)).c : 0.0;
            row.delta = gain > 0.0 ? gain : 0.0;
        }
        if (cfg.outputs.purity) row.purity = rho.purity();
        if (cfg.outputs.populations) {
            const Eigen::Vector4d pops = rho.populations();
            row.pop00 = pops(0);
            row.pop01 = pops(1);
            row.pop10 = pops(2);
            row.pop11 = pops(3);
        }
        if (cfg.cross_check) row.residual = frobenius_distance(rho, solve_steady(p).rho);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

void write_optional(std::ostream& os, const std::optional<double>& v, bool failed) {
    os << ',';
    if (failed) {
        os << "nan";
    } else if (v) {
        os << format_double(*v);
    }
}

}  // namespace

std::vector<CsvRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const auto na = static_cast<std::size_t>(cfg.alpha.count);
    const auto ne = static_cast<std::size_t>(cfg.eta.count);
    std::vector<CsvRow> rows(na * ne);
    parallel_for(rows.size(), resolve_threads(cfg.threads), [&](std::size_t idx) {
        const int ia = static_cast<int>(idx / ne);
        const int ie = static_cast<int>(idx % ne);
        rows[idx] = evaluate_point(cfg, cfg.alpha.at(ia), cfg.eta.at(ie));
    });
    return rows;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (x == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& os, const CsvRow& row) {
    const bool failed = row.error.has_value();
    os << to_string(row.mode) << ',' << format_double(row.j) << ',' << format_double(row.gamma)
       << ',' << format_double(row.alpha) << ',' << format_double(row.eta);
    write_optional(os, row.concurrence, failed);
    write_optional(os, row.delta, failed);
    write_optional(os, row.purity, failed);
    write_optional(os, row.pop00, failed);
    write_optional(os, row.pop01, failed);
    write_optional(os, row.pop10, failed);
    write_optional(os, row.pop11, failed);
    write_optional(os, row.residual, failed);
    os << '\n';
}

}  // namespace dimerss
