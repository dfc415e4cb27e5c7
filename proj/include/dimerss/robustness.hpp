// robustness.hpp: Signal-to-noise figure of merit for steady-state entanglement.
//
// SNR = alpha* / sqrt(2 eta*), where alpha* maximizes the noiseless
// concurrence and eta* is the smallest noise strength at which the best
// concurrence over all drive amplitudes collapses to zero.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dimerss/liouvillian.hpp"

namespace dimerss {

/// Fixed search protocol. The defaults make every SNR reproducible bit-for-bit.
struct SearchProtocol {
    double alpha_max{10.0};
    int alpha_grid{200};
    double alpha_tol{1e-4};       // golden-section bracket width
    double collapse_tol{1e-6};    // "concurrence is zero" threshold
    double eta_start{1e-2};       // first bracketing probe
    double eta_rel_tol{1e-3};     // bisection stops at (hi - lo) <= tol * hi
    double eta_limit{1e4};
};

struct AlphaOptimum {
    double alpha_star{0.0};
    double c_star{0.0};
    /// Best lambda_1 - lambda_2 - lambda_3 - lambda_4 (unclamped); negative when separable.
    double margin{0.0};
};

/// Maximize the steady-state concurrence over alpha in [0, alpha_max].
///
/// The search runs on the unclamped concurrence margin, which stays smooth
/// where the concurrence itself is pinned at zero: a coarse grid followed by
/// golden-section refinement around the best grid node. Returns
/// alpha_star = 0, c_star = 0 if no alpha yields entanglement.
AlphaOptimum max_concurrence_over_alpha(double eta, double j, DriveMode mode,
                                        const SearchProtocol& proto = {});

/// Smallest eta at which max_alpha C(alpha, eta) < collapse_tol.
/// Throws NeverEntangled if the noiseless maximum is already zero, NoCollapse
/// if entanglement survives at eta_limit.
double eta_threshold(double j, DriveMode mode, const SearchProtocol& proto = {});

struct SnrPoint {
    double j{0.0};
    DriveMode mode{DriveMode::Common};
    double alpha_star{0.0};
    double c_star{0.0};
    double eta_star{0.0};
    double snr{0.0};
    std::optional<std::string> error;
};

SnrPoint snr_point(double j, DriveMode mode, const SearchProtocol& proto = {});

/// One SnrPoint per coupling; failures are recorded in SnrPoint::error.
std::vector<SnrPoint> snr_curve(std::span<const double> j_values, DriveMode mode,
                                const SearchProtocol& proto = {}, unsigned threads = 1);

}  // namespace dimerss
