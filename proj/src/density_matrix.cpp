#include "dimerss/density_matrix.hpp"

#include <cmath>

namespace dimerss {

Physicality physicality(const Mat4& m) {
    Physicality out{};
    out.hermiticity_defect = hermiticity_defect(m);
    out.trace_defect = std::abs(m.trace() - 1.0);
    const Mat4 herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat4> solver(herm, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = solver.eigenvalues().minCoeff();
    return out;
}

DensityMatrix::DensityMatrix(const Mat4& m, double herm_tol) {
    if (!m.allFinite()) throw NumericalError("DensityMatrix: non-finite entries");
    if (hermiticity_defect(m) > herm_tol) {
        throw HermiticityViolation("DensityMatrix: input is not Hermitian within tolerance");
    }
    m_ = 0.5 * (m + m.adjoint());
}

DensityMatrix DensityMatrix::from_parameters(const DensityParameters& p) {
    using C = std::complex<double>;
    Mat4 m;
    m(0, 0) = p.a;
    m(1, 1) = p.e;
    m(2, 2) = p.h;
    m(3, 3) = 1.0 - p.a - p.e - p.h;
    m(0, 1) = C(p.b1, p.b2);
    m(0, 2) = C(p.c1, p.c2);
    m(0, 3) = C(p.d1, p.d2);
    m(1, 2) = C(p.f1, p.f2);
    m(1, 3) = C(p.g1, p.g2);
    m(2, 3) = C(p.i1, p.i2);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < r; ++c) m(r, c) = std::conj(m(c, r));
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(Mat4(Mat4::Identity() * 0.25));
}

DensityMatrix DensityMatrix::basis_projector(int index) {
    if (index < 0 || index > 3) throw InvalidParameter("basis_projector: index out of range");
    Mat4 m = Mat4::Zero();
    m(index, index) = 1.0;
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::pure(const Eigen::Vector4cd& psi) {
    const Eigen::Vector4cd n = psi.normalized();
    return DensityMatrix(Mat4(n * n.adjoint()));
}

DensityParameters DensityMatrix::parameters() const {
    DensityParameters p;
    p.a = m_(0, 0).real();
    p.e = m_(1, 1).real();
    p.h = m_(2, 2).real();
    p.b1 = m_(0, 1).real();
    p.b2 = m_(0, 1).imag();
    p.c1 = m_(0, 2).real();
    p.c2 = m_(0, 2).imag();
    p.d1 = m_(0, 3).real();
    p.d2 = m_(0, 3).imag();
    p.f1 = m_(1, 2).real();
    p.f2 = m_(1, 2).imag();
    p.g1 = m_(1, 3).real();
    p.g2 = m_(1, 3).imag();
    p.i1 = m_(2, 3).real();
    p.i2 = m_(2, 3).imag();
    return p;
}

}  // namespace dimerss
