// steady_state.hpp: Numeric null-space solve of L vec(rho) = 0 with unit
// trace, and an RK4 integrator of the master equation.

#pragma once

#include "dimerss/density_matrix.hpp"
#include "dimerss/liouvillian.hpp"

namespace dimerss {

struct SteadyStateReport {
    DensityMatrix rho;
    double residual{0.0};  // ||L vec(rho)||_2
    int nullity{1};        // numerical kernel dimension of L
    bool converged{false};
};

struct SteadyStateOptions {
    double residual_tol{1e-9};     // relative to ||L||_2
    double nullity_tol{1e-8};      // singular values below this * sigma_max count
    double positivity_tol{1e-8};
    bool allow_degenerate{false};  // return the report instead of throwing
};

/// Least-squares solve of [L; trace_row] vec(rho) = [0; 1].
///
/// Throws DegenerateSteadyState when the kernel is more than one-dimensional
/// (unless allowed), NoConvergence when the residual or physicality check fails.
SteadyStateReport solve_steady(const Superoperator& L, const SteadyStateOptions& opts = {});

inline SteadyStateReport solve_steady(const ModelParams& p, const SteadyStateOptions& opts = {}) {
    return solve_steady(build_liouvillian(p), opts);
}

/// Largest |eigenvalue| of L.
double spectral_radius(const Superoperator& L);

/// Classical RK4 on d vec(rho)/dt = L vec(rho) up to time t.
/// Requires dt <= 0.1 / spectral_radius(L); throws StepTooLarge on trace drift > 1e-6.
DensityMatrix evolve(const DensityMatrix& rho0, const Superoperator& L, double t, double dt);

}  // namespace dimerss
