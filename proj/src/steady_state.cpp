#include "dimerss/steady_state.hpp"

#include <cmath>
#include <string>

namespace dimerss {

SteadyStateReport solve_steady(const Superoperator& L, const SteadyStateOptions& opts) {
    const SuperMatrix& m = L.matrix();

    Eigen::JacobiSVD<SuperMatrix> svd(m);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv(0);
    int nullity = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) < opts.nullity_tol * sigma_max) ++nullity;
    }
    if (sigma_max == 0.0) nullity = 16;
    if (nullity > 1 && !opts.allow_degenerate) {
        throw DegenerateSteadyState(
            "solve_steady: kernel dimension " + std::to_string(nullity) + " > 1", nullity);
    }

    Eigen::Matrix<std::complex<double>, 17, 16> augmented;
    augmented.topRows<16>() = m;
    augmented.row(16) = trace_row();
    Eigen::Matrix<std::complex<double>, 17, 1> rhs = decltype(rhs)::Zero();
    rhs(16) = 1.0;
    const SuperVector v = augmented.colPivHouseholderQr().solve(rhs);

    SteadyStateReport report{devectorize(v, 1e-6), 0.0, nullity, false};
    report.residual = (m * vectorize(report.rho)).norm();

    const Physicality phys = report.rho.physicality();
    const bool small_residual = report.residual <= opts.residual_tol * sigma_max;
    report.converged = small_residual && phys.trace_defect <= 1e-9 &&
                       phys.min_eigenvalue >= -opts.positivity_tol;
    if (!report.converged && !(opts.allow_degenerate && nullity > 1)) {
        throw NoConvergence("solve_steady: residual " + std::to_string(report.residual) +
                            ", min eigenvalue " + std::to_string(phys.min_eigenvalue));
    }
    return report;
}

double spectral_radius(const Superoperator& L) {
    return eigvals_general(L.matrix()).cwiseAbs().maxCoeff();
}

DensityMatrix evolve(const DensityMatrix& rho0, const Superoperator& L, double t, double dt) {
    if (!(t >= 0.0)) throw InvalidParameter("evolve: t must be non-negative");
    if (!(dt > 0.0)) throw InvalidParameter("evolve: dt must be positive");
    if (t == 0.0) return rho0;
    const double radius = spectral_radius(L);
    if (radius > 0.0 && dt > 0.1 / radius) {
        throw StepTooLarge("evolve: dt exceeds 0.1 / spectral radius");
    }

    const SuperMatrix& m = L.matrix();
    const std::complex<double> trace0 = rho0.matrix().trace();
    SuperVector v = vectorize(rho0);
    const long steps = static_cast<long>(std::ceil(t / dt - 1e-12));
    const double h = t / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
        const SuperVector k1 = m * v;
        const SuperVector k2 = m * (v + 0.5 * h * k1);
        const SuperVector k3 = m * (v + 0.5 * h * k2);
        const SuperVector k4 = m * (v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (std::abs((trace_row() * v).value() - trace0) > 1e-6) {
            throw StepTooLarge("evolve: trace drifted beyond 1e-6");
        }
    }
    return devectorize(v);
}

}  // namespace dimerss
