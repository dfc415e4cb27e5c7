#include "dimerss/liouvillian.hpp"

#include <cmath>

namespace dimerss {

std::string_view to_string(DriveMode mode) {
    return mode == DriveMode::Common ? "common" : "independent";
}

DriveMode parse_drive_mode(std::string_view text) {
    if (text == "common") return DriveMode::Common;
    if (text == "independent") return DriveMode::Independent;
    throw InvalidParameter("unknown drive mode '" + std::string(text) + "'");
}

void ModelParams::validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(eta) || !std::isfinite(j) ||
        !std::isfinite(gamma)) {
        throw InvalidParameter("model parameters must be finite");
    }
    if (gamma <= 0.0) throw InvalidParameter("gamma must be positive");
    if (eta < 0.0) throw InvalidParameter("eta must be non-negative");
}

ModelParams ModelParams::in_decay_units() const {
    validate();
    return ModelParams{alpha / gamma, eta / gamma, j / gamma, 1.0, mode};
}

Mat4 Superoperator::apply(const Mat4& rho) const {
    return unvec(matrix_ * vectorize(rho));
}

double Superoperator::trace_defect() const {
    return (trace_row() * matrix_).cwiseAbs().maxCoeff();
}

SuperMatrix spre(const Mat4& a) {
    return kron(Mat4::Identity(), a);
}

SuperMatrix spost(const Mat4& b) {
    return kron(b.transpose(), Mat4::Identity());
}

SuperMatrix commutator_super(const Mat4& a) {
    return spre(a) - spost(a);
}

Eigen::Matrix<std::complex<double>, 1, 16> trace_row() {
    Eigen::Matrix<std::complex<double>, 1, 16> row = decltype(row)::Zero();
    for (int k = 0; k < 4; ++k) row(0, 5 * k) = 1.0;
    return row;
}

Mat4 exchange_operator() {
    const Mat4 lower_a = embed(pauli(PauliKind::Lower), Site::A);
    const Mat4 lower_b = embed(pauli(PauliKind::Lower), Site::B);
    return lower_a.adjoint() * lower_b + lower_a * lower_b.adjoint();
}

Mat4 collective_drive() {
    return embed(pauli(PauliKind::Y), Site::A) + embed(pauli(PauliKind::Y), Site::B);
}

Mat4 build_hamiltonian(const ModelParams& p) {
    return p.j * exchange_operator() + p.alpha * collective_drive();
}

Superoperator dissipator_super(const Mat4& c, double gamma) {
    if (!(gamma > 0.0)) throw InvalidParameter("dissipator_super: gamma must be positive");
    const Mat4 cdc = c.adjoint() * c;
    // vec(c rho c^dag) = (conj(c) (x) c) vec(rho)
    const SuperMatrix jump = kron(c.conjugate(), c);
    return Superoperator(gamma * (2.0 * jump - spre(cdc) - spost(cdc)));
}

Superoperator noise_super(const ModelParams& p) {
    if (p.eta < 0.0) throw InvalidParameter("noise_super: eta must be non-negative");
    if (p.mode == DriveMode::Common) {
        const SuperMatrix ad = commutator_super(collective_drive());
        return Superoperator(-p.eta * ad * ad);
    }
    const SuperMatrix ad_a = commutator_super(embed(pauli(PauliKind::Y), Site::A));
    const SuperMatrix ad_b = commutator_super(embed(pauli(PauliKind::Y), Site::B));
    return Superoperator(-p.eta * (ad_a * ad_a + ad_b * ad_b));
}

Superoperator build_liouvillian(const ModelParams& p) {
    p.validate();
    const std::complex<double> minus_i(0.0, -1.0);
    const Superoperator coherent(minus_i * commutator_super(build_hamiltonian(p)));
    const Mat4 lower_a = embed(pauli(PauliKind::Lower), Site::A);
    const Mat4 lower_b = embed(pauli(PauliKind::Lower), Site::B);
    return coherent + dissipator_super(lower_a, p.gamma) + dissipator_super(lower_b, p.gamma) +
           noise_super(p);
}

SuperVector vectorize(const Mat4& m) {
    return Eigen::Map<const SuperVector>(m.data());
}

SuperVector vectorize(const DensityMatrix& rho) {
    return vectorize(rho.matrix());
}

Mat4 unvec(const SuperVector& v) {
    return Eigen::Map<const Mat4>(v.data());
}

DensityMatrix devectorize(const SuperVector& v, double herm_tol) {
    return DensityMatrix(unvec(v), herm_tol);
}

}  // namespace dimerss
