// sweep.hpp: (alpha, eta) grid evaluation and CSV output.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dimerss/liouvillian.hpp"

namespace dimerss {

struct GridRange {
    double min{0.0};
    double max{0.0};
    int count{1};

    /// count == 1 yields min.
    double at(int k) const { return count == 1 ? min : min + (max - min) * k / (count - 1); }
    void validate(const char* name) const;
};

struct OutputSelection {
    bool concurrence{true};
    bool delta{true};
    bool purity{true};
    bool populations{true};

    static OutputSelection parse(const std::string& comma_list);
};

struct SweepConfig {
    DriveMode mode{DriveMode::Common};
    double j{2.0};
    GridRange alpha{0.0, 3.0, 50};
    GridRange eta{0.0, 0.5, 50};
    double gamma{1.0};
    OutputSelection outputs;
    bool cross_check{false};
    unsigned threads{0};  // 0: DIMERSS_THREADS or 1

    void validate() const;
};

/// Unselected outputs (and residual without cross-check) stay empty.
struct CsvRow {
    DriveMode mode{DriveMode::Common};
    double j{0}, gamma{1}, alpha{0}, eta{0};
    std::optional<double> concurrence, delta, purity;
    std::optional<double> pop00, pop01, pop10, pop11;
    std::optional<double> residual;
    std::optional<std::string> error;
};

/// Row-major: alpha outer, eta inner. Closed form with numeric fallback on a
/// singular denominator; residual is the closed-form vs numeric Frobenius
/// distance when cross_check is set.
std::vector<CsvRow> run_sweep(const SweepConfig& cfg);

inline constexpr const char* kCsvHeader =
    "mode,j,gamma,alpha,eta,concurrence,delta,purity,pop00,pop01,pop10,pop11,residual";

/// 17 significant digits, dot decimal separator regardless of locale.
std::string format_double(double x);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const CsvRow& row);

}  // namespace dimerss
