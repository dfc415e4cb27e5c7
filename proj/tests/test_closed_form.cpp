#include <gtest/gtest.h>

#include <random>

#include "dimerss/closed_form.hpp"
#include "dimerss/entanglement.hpp"
#include "dimerss/steady_state.hpp"
#include "test_support.hpp"

namespace dimerss {
namespace {

using test::random_params;

using Evaluator = ClosedFormSolution (*)(double, double, double);

ClosedFormSolution evaluate(DriveMode mode, double alpha, double eta, double j) {
    return mode == DriveMode::Common ? appendix_a(alpha, eta, j) : appendix_b(alpha, eta, j);
}

TEST(ClosedForm, OriginCommon) {
    const ClosedFormSolution s = appendix_a(0, 0, 0);
    EXPECT_DOUBLE_EQ(s.denom, 9.0);
    for (double v : s.numerators.as_array()) EXPECT_EQ(v, 0.0);
    EXPECT_EQ((s.assembled().matrix() - DensityMatrix::basis_projector(3).matrix()).norm(), 0.0);
}

TEST(ClosedForm, OriginIndependent) {
    // (3 + 8 eta)(1 + 2 alpha^2 + 6 eta + 8 eta^2)^2 (3 + 2 alpha^2 + 10 eta + 8 eta^2) at the origin.
    const double hand = 3.0 * 1.0 * 1.0 * 3.0;
    const ClosedFormSolution s = appendix_b(0, 0, 0);
    EXPECT_DOUBLE_EQ(s.denom, hand);
    for (double v : s.numerators.as_array()) EXPECT_EQ(v, 0.0);
    EXPECT_EQ((s.assembled().matrix() - DensityMatrix::basis_projector(3).matrix()).norm(), 0.0);
}

TEST(ClosedForm, RejectsNegativeNoise) {
    EXPECT_THROW(appendix_a(1.0, -0.1, 1.0), InvalidParameter);
    EXPECT_THROW(appendix_b(1.0, -0.1, 1.0), InvalidParameter);
    EXPECT_THROW(appendix_a(NAN, 0.1, 1.0), InvalidParameter);
}

TEST(ClosedForm, SinglePointsAgainstNumericSolver) {
    const ModelParams pa{1.0, 0.1, 2.0, 1.0, DriveMode::Common};
    EXPECT_LT(frobenius_distance(appendix_a(1.0, 0.1, 2.0).assembled(), solve_steady(pa).rho), 1e-9);
    const ModelParams pb{1.0, 0.05, 2.0, 1.0, DriveMode::Independent};
    EXPECT_LT(frobenius_distance(appendix_b(1.0, 0.05, 2.0).assembled(), solve_steady(pb).rho), 1e-9);
}

TEST(ClosedForm, OracleEquivalenceProperty) {
    std::mt19937_64 rng(20240501);
    for (auto mode : {DriveMode::Common, DriveMode::Independent}) {
        double worst = 0.0;
        for (int k = 0; k < 500; ++k) {
            const ModelParams p = random_params(rng, mode);
            const DensityMatrix closed = closed_form_state(p);
            worst = std::max(worst, frobenius_distance(closed, solve_steady(p).rho));
            const Physicality ph = closed.physicality();
            EXPECT_GE(ph.min_eigenvalue, -1e-8);
            EXPECT_LT(ph.trace_defect, 1e-9);
            EXPECT_LT(ph.hermiticity_defect, 1e-9);
        }
        EXPECT_LT(worst, 1e-9) << to_string(mode);
    }
}

TEST(ClosedForm, SymmetryIdentities) {
    std::mt19937_64 rng(3);
    for (auto mode : {DriveMode::Common, DriveMode::Independent}) {
        for (int k = 0; k < 200; ++k) {
            const ModelParams p = random_params(rng, mode);
            const DensityParameters v = closed_form(p).values();
            EXPECT_NEAR(v.c1, v.b1, 1e-9);
            EXPECT_NEAR(v.c2, v.b2, 1e-9);
            EXPECT_NEAR(v.f1, v.d1, 1e-9);
            EXPECT_NEAR(v.f2, 0.0, 1e-9);
            EXPECT_NEAR(v.h, v.e, 1e-9);
            EXPECT_NEAR(v.i1, v.g1, 1e-9);
            EXPECT_NEAR(v.i2, v.g2, 1e-9);
        }
    }
}

TEST(ClosedForm, HornerTranscriptionAgrees) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> alpha(0.0, 4.0), eta(0.0, 1.0), j(-4.0, 4.0);
    const std::pair<Evaluator, Evaluator> pairs[] = {{appendix_a, horner::appendix_a},
                                                     {appendix_b, horner::appendix_b}};
    for (const auto& [expanded, nested] : pairs) {
        for (int k = 0; k < 500; ++k) {
            const double a = alpha(rng), e = eta(rng), jj = j(rng);
            const ClosedFormSolution x = expanded(a, e, jj), y = nested(a, e, jj);
            const double scale = std::abs(x.denom);
            EXPECT_LE(std::abs(x.denom - y.denom), 1e-12 * scale);
            const auto xn = x.numerators.as_array(), yn = y.numerators.as_array();
            for (std::size_t f = 0; f < xn.size(); ++f) {
                EXPECT_LE(std::abs(xn[f] - yn[f]), 1e-12 * scale) << DensityParameters::names[f];
            }
        }
    }
}

TEST(ClosedForm, AppendicesCoincideWithoutNoise) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> alpha(0.0, 4.0), j(0.0, 4.0);
    for (int k = 0; k < 200; ++k) {
        const double a = alpha(rng), jj = j(rng);
        EXPECT_LT(frobenius_distance(appendix_a(a, 0.0, jj).assembled(), appendix_b(a, 0.0, jj).assembled()),
                  1e-10);
    }
}

TEST(ClosedForm, GammaRescaling) {
    const ModelParams p{2.0, 0.4, 3.0, 2.0, DriveMode::Common};
    EXPECT_LT(frobenius_distance(closed_form_state(p), solve_steady(p).rho), 1e-9);
    EXPECT_LT(frobenius_distance(closed_form_state(p), appendix_a(1.0, 0.2, 1.5).assembled()), 1e-15);
}

TEST(ClosedForm, EntangledAtWeakDrive) {
    EXPECT_GT(concurrence(appendix_a(0.5, 0.0, 1.0).assembled()).c, 0.0);
}

TEST(ClosedForm, IndependentConcurrenceNonIncreasingInNoise) {
    double previous = concurrence(evaluate(DriveMode::Independent, 1.0, 0.0, 2.0).assembled()).c;
    EXPECT_GT(previous, 0.0);
    for (int k = 1; k <= 10; ++k) {
        const double c = concurrence(evaluate(DriveMode::Independent, 1.0, 0.02 * k, 2.0).assembled()).c;
        EXPECT_LE(c, previous + 1e-12) << "eta=" << 0.02 * k;
        previous = c;
    }
}

}  // namespace
}  // namespace dimerss
