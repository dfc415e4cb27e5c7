// qops.hpp: Small dense complex operators for a pair of two-level systems.
//
// Basis convention: single site {|0>, |1>} with |0> the EXCITED state. The
// lowering operator is sigma = |1><0|, so Z = diag(+1, -1) and the undriven
// dissipative attractor is |11><11|. Two-site basis is {|00>,|01>,|10>,|11>},
// site A is the left tensor factor.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>

#include "dimerss/errors.hpp"

namespace dimerss {

template <typename Real = double>
using Complex = std::complex<Real>;

template <typename Real = double>
using Op2 = Eigen::Matrix<Complex<Real>, 2, 2>;

template <typename Real = double>
using Op4 = Eigen::Matrix<Complex<Real>, 4, 4>;

template <typename Real = double>
using CMat = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

using Mat2 = Op2<double>;
using Mat4 = Op4<double>;
using MatX = CMat<double>;

enum class Site { A, B };

enum class PauliKind { X, Y, Z, Lower, Raise, Identity };

template <typename Real = double>
Op2<Real> pauli(PauliKind kind) {
    using C = Complex<Real>;
    const C i(0, 1);
    Op2<Real> lower;
    lower << C(0), C(0),
             C(1), C(0);  // |1><0|
    const Op2<Real> raise = lower.adjoint();
    switch (kind) {
        case PauliKind::Lower: return lower;
        case PauliKind::Raise: return raise;
        case PauliKind::X: return lower + raise;
        case PauliKind::Y: return i * (raise - lower);
        case PauliKind::Z: return Real(2) * raise * lower - Op2<Real>::Identity();
        case PauliKind::Identity: return Op2<Real>::Identity();
    }
    return Op2<Real>::Zero();
}

template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    using Out = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index rb = b.rows(), cb = b.cols();
    Out out(a.rows() * rb, a.cols() * cb);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

/// Places a single-site operator on `site`: op (x) I for A, I (x) op for B.
template <typename Derived>
Op4<typename Derived::RealScalar> embed(const Eigen::MatrixBase<Derived>& op, Site site) {
    using Real = typename Derived::RealScalar;
    if (op.rows() != 2 || op.cols() != 2) {
        throw DimensionMismatch("embed: single-site operator must be 2x2");
    }
    const Op2<Real> single = op;
    const Op2<Real> id = Op2<Real>::Identity();
    return site == Site::A ? Op4<Real>(kron(single, id)) : Op4<Real>(kron(id, single));
}

template <typename DerivedA, typename DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw DimensionMismatch("commutator: operands must be square and equally sized");
    }
    using Out = Eigen::Matrix<typename DerivedA::Scalar, DerivedA::RowsAtCompileTime,
                              DerivedA::ColsAtCompileTime>;
    return Out(a * b - b * a);
}

template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& a) {
    return typename Derived::PlainObject(a.adjoint());
}

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// Real eigenvalues of a Hermitian matrix, sorted in decreasing order.
template <typename Derived>
Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, 1>
eigvals_hermitian(const Eigen::MatrixBase<Derived>& a,
                  typename Derived::RealScalar tol = 1e-10) {
    using Real = typename Derived::RealScalar;
    if (a.rows() != a.cols()) throw DimensionMismatch("eigvals_hermitian: non-square input");
    if (hermiticity_defect(a) >= tol) {
        throw HermiticityViolation("eigvals_hermitian: input is not Hermitian");
    }
    using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::SelfAdjointEigenSolver<Plain> solver(Plain(a), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("eigvals_hermitian: no convergence");
    Eigen::Matrix<Real, Eigen::Dynamic, 1> values = solver.eigenvalues();
    std::sort(values.data(), values.data() + values.size(), std::greater<Real>());
    return values;
}

/// All eigenvalues of a general square matrix (complex Schur reduction).
template <typename Derived>
Eigen::Matrix<Complex<typename Derived::RealScalar>, Eigen::Dynamic, 1>
eigvals_general(const Eigen::MatrixBase<Derived>& a) {
    using Real = typename Derived::RealScalar;
    if (a.rows() != a.cols()) throw DimensionMismatch("eigvals_general: non-square input");
    using Plain = CMat<Real>;
    Eigen::ComplexEigenSolver<Plain> solver(Plain(a.template cast<Complex<Real>>()), false);
    if (solver.info() != Eigen::Success) throw NumericalError("eigvals_general: no convergence");
    return solver.eigenvalues();
}

/// exp(-i G) for Hermitian G via its eigendecomposition; exactly unitary up to rounding.
template <typename Derived>
typename Derived::PlainObject unitary_exp(const Eigen::MatrixBase<Derived>& generator) {
    using Plain = typename Derived::PlainObject;
    using C = typename Derived::Scalar;
    Eigen::SelfAdjointEigenSolver<Plain> solver(generator);
    if (solver.info() != Eigen::Success) throw NumericalError("unitary_exp: no convergence");
    const auto phases = (C(0, -1) * solver.eigenvalues().template cast<C>()).array().exp();
    return solver.eigenvectors() * phases.matrix().asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace dimerss
