// closed_form.hpp: Exact rational steady states of the driven dimer pair.
//
// Each solution is a common denominator D and numerators D*x for every one of
// the 15 density parameters, with the drive amplitude, noise strength and
// coupling all measured in units of the decay rate.

#pragma once

#include "dimerss/density_matrix.hpp"
#include "dimerss/liouvillian.hpp"

namespace dimerss {

struct ClosedFormSolution {
    double denom{1.0};
    DensityParameters numerators;  // each field holds D * value

    DensityParameters values() const;
    DensityMatrix assembled() const;
};

/// Common fluctuating drive. Polynomials evaluated term by term in expanded form.
ClosedFormSolution appendix_a(double alpha, double eta, double j);

/// Independent fluctuating drives.
ClosedFormSolution appendix_b(double alpha, double eta, double j);

/// Dispatches on p.mode after rescaling to gamma = 1.
ClosedFormSolution closed_form(const ModelParams& p);

inline DensityMatrix closed_form_state(const ModelParams& p) {
    return closed_form(p).assembled();
}

namespace horner {

// Same polynomials expanded and nested in eta (coefficients nested in alpha^2
// and j^2). Used only to cross-check the expanded evaluation.
ClosedFormSolution appendix_a(double alpha, double eta, double j);
ClosedFormSolution appendix_b(double alpha, double eta, double j);

}  // namespace horner

}  // namespace dimerss
