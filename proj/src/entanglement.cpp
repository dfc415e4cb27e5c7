#include "dimerss/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dimerss/closed_form.hpp"

namespace dimerss {

namespace {

const Mat4& flip_operator() {
    static const Mat4 yy = kron(pauli(PauliKind::Y), pauli(PauliKind::Y));
    return yy;
}

ConcurrenceResult from_lambdas(std::array<double, 4> lambdas) {
    std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());
    ConcurrenceResult out{lambdas, 0.0};
    out.c = std::clamp(out.margin(), 0.0, 1.0);
    return out;
}

}  // namespace

Mat4 spin_flip(const Mat4& rho) {
    const Mat4& yy = flip_operator();
    return yy * rho.conjugate() * yy;
}

ConcurrenceResult concurrence(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Mat4> rho_eig(rho.matrix());
    if (rho_eig.info() != Eigen::Success) return concurrence_general(rho);

    // Round-off negativity is clamped for the square root only.
    const Eigen::Vector4d roots = rho_eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Mat4 sqrt_rho = rho_eig.eigenvectors() * roots.cast<std::complex<double>>().asDiagonal() *
                          rho_eig.eigenvectors().adjoint();
    Mat4 r = sqrt_rho * spin_flip(rho) * sqrt_rho;
    r = 0.5 * (r + r.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<Mat4> r_eig(r, Eigen::EigenvaluesOnly);
    if (r_eig.info() != Eigen::Success) return concurrence_general(rho);

    std::array<double, 4> lambdas{};
    for (int k = 0; k < 4; ++k) lambdas[k] = std::sqrt(std::max(r_eig.eigenvalues()(k), 0.0));
    return from_lambdas(lambdas);
}

ConcurrenceResult concurrence_general(const DensityMatrix& rho) {
    const Mat4 product = rho.matrix() * spin_flip(rho);
    const Eigen::VectorXcd ev = eigvals_general(product);
    std::array<double, 4> lambdas{};
    for (int k = 0; k < 4; ++k) lambdas[k] = std::sqrt(std::abs(ev(k)));
    return from_lambdas(lambdas);
}

double steady_concurrence(double alpha, double eta, double j, DriveMode mode) {
    const ModelParams p{alpha, eta, j, 1.0, mode};
    return concurrence(closed_form_state(p)).c;
}

double delta(double alpha, double eta, double j, DriveMode mode) {
    if (eta < 0.0) throw InvalidParameter("delta: eta must be non-negative");
    if (eta == 0.0) return 0.0;
    const double gain = steady_concurrence(alpha, eta, j, mode) -
                        steady_concurrence(alpha, 0.0, j, mode);
    return gain > 0.0 ? gain : 0.0;
}

}  // namespace dimerss
