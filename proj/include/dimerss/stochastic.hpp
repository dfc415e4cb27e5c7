// stochastic.hpp: Monte Carlo unraveling of the fluctuating drive.
//
// Each trajectory evolves rho under the deterministic dissipators and the
// random unitary exp(-i (H dt + sum_k V_k dW_k)), dW_k ~ Normal(0, 2 eta dt).
// Common drive shares one increment across V = Y_A + Y_B; independent drives
// draw one increment each for Y_A and Y_B. The ensemble mean converges to the
// steady state of the averaged master equation.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "dimerss/density_matrix.hpp"
#include "dimerss/liouvillian.hpp"

namespace dimerss {

struct TrajectoryConfig {
    ModelParams params;
    double dt{0.005};
    double t_end{40.0};
    int n_traj{1000};
    std::uint64_t seed{20110502};
    /// Each increment is the sum of this many finer Gaussian draws. A run at
    /// (dt, 2) consumes the same random stream as a run at (dt/2, 1), so the
    /// two see identical Brownian paths.
    int noise_substeps{1};
    unsigned threads{1};
    /// Keep every final state in EnsembleResult::trajectories.
    bool keep_trajectories{false};

    void validate() const;
};

struct EnsembleResult {
    DensityMatrix rho_mean;
    double stderr_frobenius{0.0};  // standard error of rho_mean in Frobenius norm
    int n_traj{0};
    double t_end{0.0};
    double max_trace_defect{0.0};
    double max_hermiticity_defect{0.0};
    std::vector<Mat4> trajectories;  // filled only with keep_trajectories
};

/// Independent Gaussian stream for one trajectory, derived from (seed, index).
class NoiseStream {
  public:
    NoiseStream(std::uint64_t seed, std::uint64_t trajectory);
    double standard_normal() { return normal_(engine_); }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Precomputed propagators for one parameter set and time step.
///
/// Internally the state lives in a fixed basis T in which every step
/// generator H dt + sum_k V_k dW_k is block diagonal with two real symmetric
/// 2x2 blocks, so each kick is an exact closed-form 2x2 exponential. The
/// state is stored as 16 real coordinates: each diagonal block as
/// t I + x X + y Y + z Z (a kick rotates (x, y, z)), then re/im of the four
/// off-diagonal block entries. The dissipative propagator is a real 16x16
/// map on those coordinates.
class NoisyStepper {
  public:
    using BlockState = Eigen::Matrix<double, 16, 1>;

    explicit NoisyStepper(const TrajectoryConfig& cfg);

    int channels() const noexcept { return channels_; }
    double dt() const noexcept { return dt_; }

    /// Wiener increments for one step (common mode copies channel 0 into 1).
    std::array<double, 2> draw_increments(NoiseStream& noise) const;

    /// exp(-i (H dt + sum_k V_k dW_k)) in the computational basis.
    Mat4 kick_unitary(const std::array<double, 2>& increments) const;

    /// One Strang step in the computational basis: half dissipation, kick, half dissipation.
    Mat4 step(const Mat4& rho, NoiseStream& noise) const;

    BlockState enter(const Mat4& rho) const;
    Mat4 leave(const BlockState& x) const;
    static double trace(const BlockState& x) { return 2.0 * (x(0) + x(4)); }
    void kick(BlockState& x, const std::array<double, 2>& increments) const;
    /// exp(D t) for t = dt/2 (half) or dt (full); D is the sum of both dissipators.
    void dissipate(BlockState& x, bool half) const;

  private:
    using RealSuper = Eigen::Matrix<double, 16, 16>;
    using Real4 = Eigen::Matrix4d;

    double dt_;
    double eta_;
    int channels_;
    int substeps_;
    double alpha_dt_;
    double exchange_dt_;
    Mat4 basis_;
    std::array<Real4, 3> block_ops_;  // exchange, Y_A, Y_B in the block basis
    RealSuper half_;
    RealSuper full_;
};

/// One noisy step from rho (single-step form of the integrator).
DensityMatrix noisy_step(const DensityMatrix& rho, const TrajectoryConfig& cfg, NoiseStream& noise);

/// Final state of trajectory `index` started from I/4.
Mat4 run_trajectory(const NoisyStepper& stepper, const TrajectoryConfig& cfg, std::uint64_t index);

/// Average of cfg.n_traj trajectories at t_end. Deterministic for a fixed seed
/// at any thread count.
EnsembleResult run_ensemble(const TrajectoryConfig& cfg);

}  // namespace dimerss
