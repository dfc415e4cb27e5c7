// Shared generators for the unit and acceptance tests.

#pragma once

#include <random>

#include "dimerss/density_matrix.hpp"
#include "dimerss/liouvillian.hpp"

namespace dimerss::test {

template <int N>
Eigen::Matrix<std::complex<double>, N, N> random_matrix(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::Matrix<std::complex<double>, N, N> m;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) m(r, c) = std::complex<double>(g(rng), g(rng));
    return m;
}

/// Random full-rank density matrix G G^dag / tr.
inline DensityMatrix random_density(std::mt19937_64& rng) {
    const Mat4 g = random_matrix<4>(rng);
    const Mat4 m = g * g.adjoint();
    return DensityMatrix(Mat4(m / m.trace()));
}

inline Mat2 random_unitary2(std::mt19937_64& rng) {
    Mat2 h = random_matrix<2>(rng);
    h = (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Mat2> es(h);
    const Eigen::Vector2cd phases =
        (std::complex<double>(0, 1) * es.eigenvalues().cast<std::complex<double>>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline ModelParams random_params(std::mt19937_64& rng, DriveMode mode) {
    std::uniform_real_distribution<double> alpha(0.0, 4.0), eta(0.0, 1.0), j(0.0, 4.0);
    const double a = alpha(rng), e = eta(rng), jj = j(rng);
    return ModelParams{a, e, jj, 1.0, mode};
}

}  // namespace dimerss::test
