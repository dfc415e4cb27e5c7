// density_matrix.hpp: Two-qubit density matrix and its 15-parameter real view.

#pragma once

#include <array>
#include <string_view>

#include "dimerss/qops.hpp"

namespace dimerss {

/// The 15 real parameters of a Hermitian unit-trace 4x4 matrix:
///
///     | a          b1 + i b2   c1 + i c2   d1 + i d2 |
///     | b1 - i b2  e           f1 + i f2   g1 + i g2 |
///     | c1 - i c2  f1 - i f2   h           i1 + i i2 |
///     | d1 - i d2  g1 - i g2   i1 - i i2   1-a-e-h   |
struct DensityParameters {
    double a{0}, b1{0}, b2{0}, c1{0}, c2{0}, d1{0}, d2{0}, e{0};
    double f1{0}, f2{0}, g1{0}, g2{0}, h{0}, i1{0}, i2{0};

    static constexpr std::array<std::string_view, 15> names{
        "a", "b1", "b2", "c1", "c2", "d1", "d2", "e",
        "f1", "f2", "g1", "g2", "h", "i1", "i2"};

    std::array<double, 15> as_array() const {
        return {a, b1, b2, c1, c2, d1, d2, e, f1, f2, g1, g2, h, i1, i2};
    }
};

struct Physicality {
    double hermiticity_defect;
    double trace_defect;   // |tr(rho) - 1|
    double min_eigenvalue;

    bool ok(double herm_tol = 1e-9, double trace_tol = 1e-9, double pos_tol = 1e-8) const {
        return hermiticity_defect < herm_tol && trace_defect <= trace_tol &&
               min_eigenvalue >= -pos_tol;
    }
};

Physicality physicality(const Mat4& m);

/// Hermitian 4x4 matrix in the {|00>,|01>,|10>,|11>} basis.
///
/// Construction Hermitizes the input after checking the defect is below
/// `herm_tol`; trace and positivity are left to `physicality()` so that
/// intermediate states of an integrator can be held in the same type.
class DensityMatrix {
  public:
    DensityMatrix() : m_(Mat4::Zero()) { m_(3, 3) = 1.0; }
    explicit DensityMatrix(const Mat4& m, double herm_tol = 1e-8);

    static DensityMatrix from_parameters(const DensityParameters& p);
    static DensityMatrix maximally_mixed();
    static DensityMatrix basis_projector(int index);
    static DensityMatrix pure(const Eigen::Vector4cd& psi);

    const Mat4& matrix() const noexcept { return m_; }
    std::complex<double> operator()(int r, int c) const { return m_(r, c); }

    DensityParameters parameters() const;
    Physicality physicality() const { return dimerss::physicality(m_); }
    double purity() const { return (m_ * m_).trace().real(); }
    Eigen::Vector4d populations() const { return m_.diagonal().real(); }

  private:
    Mat4 m_;
};

inline double frobenius_distance(const DensityMatrix& x, const DensityMatrix& y) {
    return (x.matrix() - y.matrix()).norm();
}

}  // namespace dimerss
