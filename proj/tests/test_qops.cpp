#include <gtest/gtest.h>

#include <random>

#include "dimerss/qops.hpp"
#include "test_support.hpp"

namespace dimerss {
namespace {

using test::random_matrix;

TEST(Pauli, ConventionDefinitions) {
    const Mat2 z = pauli(PauliKind::Z);
    EXPECT_NEAR(std::abs(z(0, 0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(z(1, 1) + 1.0), 0.0, 1e-15);
    EXPECT_LT(std::abs(z(0, 1)) + std::abs(z(1, 0)), 1e-15);

    const Mat2 lower = pauli(PauliKind::Lower);
    EXPECT_EQ(lower(1, 0), std::complex<double>(1.0));  // |1><0|
    EXPECT_LT((lower * lower).norm(), 1e-15);

    const Mat2 raise = pauli(PauliKind::Raise);
    EXPECT_LT((2.0 * raise * lower - Mat2::Identity() - z).norm(), 1e-15);
    EXPECT_LT((pauli(PauliKind::X) - (lower + raise)).norm(), 1e-15);
    EXPECT_LT((pauli(PauliKind::Y) - std::complex<double>(0, 1) * (raise - lower)).norm(), 1e-15);
}

TEST(Pauli, Algebra) {
    const Mat2 x = pauli(PauliKind::X), y = pauli(PauliKind::Y), z = pauli(PauliKind::Z);
    // Y here is minus the textbook Pauli-Y, so [X, Y] = -2i Z.
    EXPECT_LT((commutator(x, y) + std::complex<double>(0, 2) * z).norm(), 1e-14);
    EXPECT_LT((x * x - Mat2::Identity()).norm(), 1e-15);
    EXPECT_LT((y * y - Mat2::Identity()).norm(), 1e-15);
}

TEST(Pauli, FloatScalarInstantiates) {
    const auto zf = pauli<float>(PauliKind::Z);
    EXPECT_FLOAT_EQ(zf(1, 1).real(), -1.0f);
}

TEST(Embed, SitePlacement) {
    EXPECT_LT((embed(Mat2::Identity(), Site::A) - Mat4::Identity()).norm(), 1e-15);
    const Mat4 za = embed(pauli(PauliKind::Z), Site::A);
    const Mat4 zb = embed(pauli(PauliKind::Z), Site::B);
    const Eigen::Vector4d expect_a(1, 1, -1, -1), expect_b(1, -1, 1, -1);
    EXPECT_LT((za.diagonal().real() - expect_a).norm(), 1e-15);
    EXPECT_LT((zb.diagonal().real() - expect_b).norm(), 1e-15);
    EXPECT_LT((za - Mat4(za.diagonal().asDiagonal())).norm(), 1e-15);
}

TEST(Embed, RejectsWrongShape) {
    const MatX three = MatX::Identity(3, 3);
    EXPECT_THROW(embed(three, Site::A), DimensionMismatch);
}

TEST(Kron, Basics) {
    EXPECT_LT((kron(Mat2::Identity(), Mat2::Identity()) - MatX::Identity(4, 4)).norm(), 1e-15);
    Mat2 d = Mat2::Zero();
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    const MatX k = kron(d, Mat2::Identity());
    const Eigen::Vector4d expect(1, 1, 2, 2);
    EXPECT_LT((k.diagonal().real() - expect).norm(), 1e-15);
}

TEST(Kron, MixedProductProperty) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat2 a = random_matrix<2>(rng), b = random_matrix<2>(rng);
        const Mat2 c = random_matrix<2>(rng), d = random_matrix<2>(rng);
        // Oracle: explicit index formula for the Kronecker product.
        MatX lhs = kron(a, b) * kron(c, d);
        const Mat2 ac = a * c, bd = b * d;
        MatX oracle(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) oracle(i * 2 + k, j * 2 + l) = ac(i, j) * bd(k, l);
        EXPECT_LT((lhs - oracle).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Operators, AdjointAndCommutatorProperties) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat4 a = random_matrix<4>(rng), b = random_matrix<4>(rng);
        EXPECT_LT((adjoint(adjoint(a)) - a).norm(), 1e-15);
        EXPECT_LT(std::abs(commutator(a, b).trace()), 1e-12);
    }
}

TEST(Operators, CommutatorRejectsMismatch) {
    EXPECT_THROW(commutator(MatX::Identity(2, 2), MatX::Identity(3, 3)), DimensionMismatch);
    EXPECT_THROW(commutator(MatX::Identity(2, 3), MatX::Identity(2, 3)), DimensionMismatch);
}

TEST(Eigensolvers, HermitianSortedDescending) {
    Mat4 d = Mat4::Zero();
    d.diagonal() << 3.0, 1.0, 2.0, 0.0;
    const Eigen::VectorXd ev = eigvals_hermitian(d);
    ASSERT_EQ(ev.size(), 4);
    EXPECT_NEAR(ev(0), 3.0, 1e-14);
    EXPECT_NEAR(ev(1), 2.0, 1e-14);
    EXPECT_NEAR(ev(2), 1.0, 1e-14);
    EXPECT_NEAR(ev(3), 0.0, 1e-14);
}

TEST(Eigensolvers, HermitianRejectsNonHermitian) {
    Mat4 m = Mat4::Identity();
    m(0, 1) = 1.0;
    EXPECT_THROW(eigvals_hermitian(m), HermiticityViolation);
    EXPECT_THROW(eigvals_hermitian(MatX::Identity(2, 3)), DimensionMismatch);
}

TEST(Eigensolvers, GeneralRecoversConstructedSpectrum) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        // Distinct eigenvalues, random well-conditioned V.
        Eigen::Vector4cd lambda;
        for (int k = 0; k < 4; ++k) lambda(k) = std::complex<double>(k + u(rng) * 0.2, u(rng));
        Mat4 v = random_matrix<4>(rng) + 3.0 * Mat4::Identity();
        const Mat4 a = v * lambda.asDiagonal() * v.inverse();
        const Eigen::VectorXcd got = eigvals_general(a);
        for (int k = 0; k < 4; ++k) {
            double best = 1e9;
            for (int m = 0; m < 4; ++m) best = std::min(best, std::abs(got(m) - lambda(k)));
            EXPECT_LT(best, 1e-8);
        }
    }
}

TEST(Eigensolvers, EigenvalueSumEqualsTrace) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat4 a = random_matrix<4>(rng);
        EXPECT_LT(std::abs(eigvals_general(a).sum() - a.trace()), 1e-9);
    }
}

TEST(Eigensolvers, UnitaryExpIsUnitaryAndMatchesSeries) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Mat4 g = random_matrix<4>(rng) * 0.1;
        g = (g + g.adjoint()).eval();
        const Mat4 u = unitary_exp(g);
        EXPECT_LT((u * u.adjoint() - Mat4::Identity()).norm(), 1e-13);
        // Oracle: Taylor series of exp(-iG), converged for ||G|| < 1.
        Mat4 term = Mat4::Identity(), series = Mat4::Identity();
        for (int k = 1; k < 30; ++k) {
            term = (term * g * std::complex<double>(0, -1) / double(k)).eval();
            series += term;
        }
        EXPECT_LT((u - series).norm(), 1e-13);
    }
}

}  // namespace
}  // namespace dimerss
