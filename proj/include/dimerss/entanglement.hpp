// entanglement.hpp: Wootters concurrence and the noise-induced gain Delta.

#pragma once

#include <array>

#include "dimerss/density_matrix.hpp"
#include "dimerss/liouvillian.hpp"

namespace dimerss {

struct ConcurrenceResult {
    std::array<double, 4> lambdas{};  // decreasing, non-negative
    double c{0.0};

    /// lambda_1 - lambda_2 - lambda_3 - lambda_4 before clamping at zero.
    double margin() const { return lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]; }
};

/// (Y (x) Y) conj(rho) (Y (x) Y)
Mat4 spin_flip(const Mat4& rho);
inline Mat4 spin_flip(const DensityMatrix& rho) { return spin_flip(rho.matrix()); }

/// Hermitian route: lambdas from the spectrum of sqrt(rho) rho~ sqrt(rho).
/// Falls back to concurrence_general if the Hermitian solver fails.
ConcurrenceResult concurrence(const DensityMatrix& rho);

/// General route: lambdas from |eigenvalues of rho rho~|.
ConcurrenceResult concurrence_general(const DensityMatrix& rho);

/// Concurrence of the closed-form steady state for the given mode.
double steady_concurrence(double alpha, double eta, double j, DriveMode mode);

/// max(0, C(alpha, eta) - C(alpha, 0)) on the closed-form steady states.
double delta(double alpha, double eta, double j, DriveMode mode);

}  // namespace dimerss
