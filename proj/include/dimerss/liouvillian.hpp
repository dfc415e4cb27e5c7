// liouvillian.hpp: Hamiltonian, dissipators, drive-noise terms and the full
// master-equation generator on column-stacked vec(rho).
//
// Vectorization: vec stacks columns, so vec(X rho Y) = (Y^T (x) X) vec(rho).
// All rates are in units of the decay rate; hbar = 1.

#pragma once

#include <string>
#include <string_view>

#include "dimerss/density_matrix.hpp"
#include "dimerss/qops.hpp"

namespace dimerss {

enum class DriveMode { Common, Independent };

std::string_view to_string(DriveMode mode);
DriveMode parse_drive_mode(std::string_view text);

struct ModelParams {
    double alpha{0.0};
    double eta{0.0};
    double j{0.0};
    double gamma{1.0};
    DriveMode mode{DriveMode::Common};

    /// Throws InvalidParameter unless gamma > 0, eta >= 0 and all values finite.
    void validate() const;

    /// Same physics expressed with gamma = 1.
    ModelParams in_decay_units() const;
};

using SuperMatrix = Eigen::Matrix<std::complex<double>, 16, 16>;
using SuperVector = Eigen::Matrix<std::complex<double>, 16, 1>;

class Superoperator {
  public:
    Superoperator() : matrix_(SuperMatrix::Zero()) {}
    explicit Superoperator(const SuperMatrix& m) : matrix_(m) {}

    const SuperMatrix& matrix() const noexcept { return matrix_; }

    Mat4 apply(const Mat4& rho) const;

    Superoperator operator+(const Superoperator& other) const {
        return Superoperator(matrix_ + other.matrix_);
    }
    Superoperator operator*(double s) const { return Superoperator(matrix_ * s); }

    /// max |(trace row) * L|; zero for generators that conserve probability.
    double trace_defect() const;

  private:
    SuperMatrix matrix_;
};

/// Left and right multiplication superoperators: rho -> a rho, rho -> rho b.
SuperMatrix spre(const Mat4& a);
SuperMatrix spost(const Mat4& b);
/// rho -> [a, rho]
SuperMatrix commutator_super(const Mat4& a);

/// Row vector t with t . vec(rho) = tr(rho).
Eigen::Matrix<std::complex<double>, 1, 16> trace_row();

Mat4 exchange_operator();     // sigma_A^dag sigma_B + sigma_A sigma_B^dag
Mat4 collective_drive();      // sigma_A^y + sigma_B^y

Mat4 build_hamiltonian(const ModelParams& p);
Superoperator dissipator_super(const Mat4& c, double gamma);
Superoperator noise_super(const ModelParams& p);
Superoperator build_liouvillian(const ModelParams& p);

SuperVector vectorize(const DensityMatrix& rho);
SuperVector vectorize(const Mat4& m);
Mat4 unvec(const SuperVector& v);
/// Reshape and Hermitize; throws HermiticityViolation beyond `herm_tol`.
DensityMatrix devectorize(const SuperVector& v, double herm_tol = 1e-8);

}  // namespace dimerss
