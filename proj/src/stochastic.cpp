#include "dimerss/stochastic.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dimerss/parallel.hpp"

namespace dimerss {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Columns: (|00>+|11>), (|01>+|10>), (|00>-|11>), (|01>-|10>) over sqrt(2),
// each written in the frame where Y on every site becomes the real X.
Mat4 block_basis() {
    using C = std::complex<double>;
    const Mat2 phase = Eigen::Vector2cd(C(1, 0), C(0, 1)).asDiagonal();
    const Mat4 frame = kron(phase, phase);
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 bell;
    bell << s, 0, s, 0,
            0, s, 0, s,
            0, s, 0, -s,
            s, 0, -s, 0;
    return frame.adjoint() * bell;
}

Eigen::Matrix4d project_real(const Mat4& basis, const Mat4& op) {
    const Mat4 m = basis.adjoint() * op * basis;
    if (m.imag().cwiseAbs().maxCoeff() > 1e-12 ||
        m.real().block<2, 2>(0, 2).cwiseAbs().maxCoeff() > 1e-12 ||
        m.real().block<2, 2>(2, 0).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::logic_error("block basis does not split the drive generator");
    }
    return m.real();
}

// exp(-i M) for real symmetric M = [[p, q], [q, r]], written as
// phase * (c I - i (a Z + b X)) with c^2 + a^2 + b^2 = 1.
struct Su2 {
    double phase;
    double c;
    double a;
    double b;
};

Su2 su2_exp(double p, double q, double r) {
    const double half_gap = 0.5 * (p - r);
    const double omega = std::hypot(half_gap, q);
    const double sinc = omega < 1e-6 ? 1.0 - omega * omega / 6.0 : std::sin(omega) / omega;
    return {0.5 * (p + r), std::cos(omega), sinc * half_gap, sinc * q};
}

Mat2 su2_matrix(const Su2& u) {
    using C = std::complex<double>;
    Mat2 m;
    m << C(u.c, -u.a), C(0, -u.b),
         C(0, -u.b), C(u.c, u.a);
    return std::polar(1.0, -u.phase) * m;
}

// (x, y, z) -> Bloch vector of U (x X + y Y + z Z) U^dag, with k = (b, 0, a).
void rotate(const Su2& u, double* v) {
    const double kx = u.b, kz = u.a;
    const double dot = kx * v[0] + kz * v[2];
    const double scale = u.c * u.c - kx * kx - kz * kz;
    const double cx = -kz * v[1];            // (k x v)_x
    const double cy = kz * v[0] - kx * v[2];  // (k x v)_y
    const double cz = kx * v[1];             // (k x v)_z
    v[0] = scale * v[0] + 2.0 * (u.c * cx + kx * dot);
    v[1] = scale * v[1] + 2.0 * u.c * cy;
    v[2] = scale * v[2] + 2.0 * (u.c * cz + kz * dot);
}

Eigen::Matrix<double, 16, 1> to_block_coords(const Mat4& m) {
    Eigen::Matrix<double, 16, 1> x;
    for (int k = 0; k < 2; ++k) {
        const int o = 2 * k;
        const std::complex<double> off = m(o, o + 1);
        x(4 * k + 0) = 0.5 * (m(o, o).real() + m(o + 1, o + 1).real());
        x(4 * k + 1) = off.real();
        x(4 * k + 2) = -off.imag();
        x(4 * k + 3) = 0.5 * (m(o, o).real() - m(o + 1, o + 1).real());
    }
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            x(8 + 4 * r + 2 * c) = m(r, 2 + c).real();
            x(9 + 4 * r + 2 * c) = m(r, 2 + c).imag();
        }
    }
    return x;
}

Mat4 from_block_coords(const Eigen::Matrix<double, 16, 1>& x) {
    using C = std::complex<double>;
    Mat4 m;
    for (int k = 0; k < 2; ++k) {
        const int o = 2 * k;
        m(o, o) = x(4 * k) + x(4 * k + 3);
        m(o + 1, o + 1) = x(4 * k) - x(4 * k + 3);
        m(o, o + 1) = C(x(4 * k + 1), -x(4 * k + 2));
        m(o + 1, o) = C(x(4 * k + 1), x(4 * k + 2));
    }
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            m(r, 2 + c) = C(x(8 + 4 * r + 2 * c), x(9 + 4 * r + 2 * c));
            m(2 + c, r) = std::conj(m(r, 2 + c));
        }
    }
    return m;
}

}  // namespace

void TrajectoryConfig::validate() const {
    params.validate();
    if (!(dt > 0.0)) throw InvalidParameter("trajectory: dt must be positive");
    if (!(t_end >= 0.0)) throw InvalidParameter("trajectory: t_end must be non-negative");
    if (n_traj < 1) throw InvalidParameter("trajectory: n_traj must be at least 1");
    if (noise_substeps < 1) throw InvalidParameter("trajectory: noise_substeps must be at least 1");
}

NoiseStream::NoiseStream(std::uint64_t seed, std::uint64_t trajectory)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(trajectory + 0x632be59bd9b4e019ULL))) {}

NoisyStepper::NoisyStepper(const TrajectoryConfig& cfg)
    : dt_(cfg.dt),
      eta_(cfg.params.eta),
      channels_(cfg.params.mode == DriveMode::Common ? 1 : 2),
      substeps_(cfg.noise_substeps),
      alpha_dt_(cfg.params.alpha * cfg.dt),
      exchange_dt_(cfg.params.j * cfg.dt),
      basis_(block_basis()) {
    cfg.validate();
    block_ops_ = {project_real(basis_, exchange_operator()),
                  project_real(basis_, embed(pauli(PauliKind::Y), Site::A)),
                  project_real(basis_, embed(pauli(PauliKind::Y), Site::B))};

    const Mat4 lower_a = embed(pauli(PauliKind::Lower), Site::A);
    const Mat4 lower_b = embed(pauli(PauliKind::Lower), Site::B);
    const SuperMatrix d = (dissipator_super(lower_a, cfg.params.gamma) +
                           dissipator_super(lower_b, cfg.params.gamma)).matrix();
    const SuperMatrix e_half = SuperMatrix((d.real() * (0.5 * cfg.dt)).exp().cast<std::complex<double>>());
    const SuperMatrix e_full = SuperMatrix((d.real() * cfg.dt).exp().cast<std::complex<double>>());

    // Column k: image of the k-th coordinate matrix.
    for (int k = 0; k < 16; ++k) {
        BlockState unit = BlockState::Zero();
        unit(k) = 1.0;
        const SuperVector v = vectorize(leave(unit));
        half_.col(k) = enter(unvec(e_half * v));
        full_.col(k) = enter(unvec(e_full * v));
    }
}

NoisyStepper::BlockState NoisyStepper::enter(const Mat4& rho) const {
    return to_block_coords(basis_.adjoint() * rho * basis_);
}

Mat4 NoisyStepper::leave(const BlockState& x) const {
    return basis_ * from_block_coords(x) * basis_.adjoint();
}

std::array<double, 2> NoisyStepper::draw_increments(NoiseStream& noise) const {
    std::array<double, 2> inc{0.0, 0.0};
    if (eta_ == 0.0) return inc;
    const double scale = std::sqrt(2.0 * eta_ * dt_ / substeps_);
    for (int s = 0; s < substeps_; ++s)
        for (int k = 0; k < channels_; ++k) inc[k] += scale * noise.standard_normal();
    if (channels_ == 1) inc[1] = inc[0];
    return inc;
}

Mat4 NoisyStepper::kick_unitary(const std::array<double, 2>& increments) const {
    const Real4 g = exchange_dt_ * block_ops_[0] + (alpha_dt_ + increments[0]) * block_ops_[1] +
                    (alpha_dt_ + increments[1]) * block_ops_[2];
    Mat4 b = Mat4::Zero();
    b.topLeftCorner<2, 2>() = su2_matrix(su2_exp(g(0, 0), g(0, 1), g(1, 1)));
    b.bottomRightCorner<2, 2>() = su2_matrix(su2_exp(g(2, 2), g(2, 3), g(3, 3)));
    return basis_ * b * basis_.adjoint();
}

void NoisyStepper::kick(BlockState& x, const std::array<double, 2>& increments) const {
    using C = std::complex<double>;
    const double wa = alpha_dt_ + increments[0];
    const double wb = alpha_dt_ + increments[1];
    auto entry = [&](int r, int c) {
        return exchange_dt_ * block_ops_[0](r, c) + wa * block_ops_[1](r, c) + wb * block_ops_[2](r, c);
    };
    const Su2 u1 = su2_exp(entry(0, 0), entry(0, 1), entry(1, 1));
    const Su2 u2 = su2_exp(entry(2, 2), entry(2, 3), entry(3, 3));
    rotate(u1, x.data() + 1);
    rotate(u2, x.data() + 5);

    // Off-diagonal block M -> e^{-i(phase1 - phase2)} U1 M U2^dag.
    const C m00(x(8), x(9)), m01(x(10), x(11)), m10(x(12), x(13)), m11(x(14), x(15));
    const C p00(u1.c, -u1.a), p01(0, -u1.b), p11(u1.c, u1.a);  // U1 (symmetric)
    const C q00(u2.c, u2.a), q01(0, u2.b), q11(u2.c, -u2.a);   // U2^dag (symmetric)
    const C t00 = p00 * m00 + p01 * m10, t01 = p00 * m01 + p01 * m11;
    const C t10 = p01 * m00 + p11 * m10, t11 = p01 * m01 + p11 * m11;
    const C ph = std::polar(1.0, u2.phase - u1.phase);
    const C n00 = ph * (t00 * q00 + t01 * q01), n01 = ph * (t00 * q01 + t01 * q11);
    const C n10 = ph * (t10 * q00 + t11 * q01), n11 = ph * (t10 * q01 + t11 * q11);
    x(8) = n00.real(), x(9) = n00.imag(), x(10) = n01.real(), x(11) = n01.imag();
    x(12) = n10.real(), x(13) = n10.imag(), x(14) = n11.real(), x(15) = n11.imag();
}

void NoisyStepper::dissipate(BlockState& x, bool half) const {
    const BlockState y = (half ? half_ : full_) * x;
    x = y;
}

Mat4 NoisyStepper::step(const Mat4& rho, NoiseStream& noise) const {
    BlockState x = enter(rho);
    dissipate(x, true);
    kick(x, draw_increments(noise));
    dissipate(x, true);
    return leave(x);
}

DensityMatrix noisy_step(const DensityMatrix& rho, const TrajectoryConfig& cfg, NoiseStream& noise) {
    const NoisyStepper stepper(cfg);
    const Mat4 next = stepper.step(rho.matrix(), noise);
    if (std::abs(next.trace() - rho.matrix().trace()) > 1e-10) {
        throw StepTooLarge("noisy_step: trace drift");
    }
    return DensityMatrix(next);
}

Mat4 run_trajectory(const NoisyStepper& stepper, const TrajectoryConfig& cfg, std::uint64_t index) {
    NoiseStream noise(cfg.seed, index);
    const Mat4 start = Mat4::Identity() * 0.25;
    const long steps = std::lround(cfg.t_end / cfg.dt);
    if (steps == 0) return start;
    // Adjacent half dissipations of consecutive Strang steps are fused into one full step.
    NoisyStepper::BlockState x = stepper.enter(start);
    stepper.dissipate(x, true);
    for (long s = 0; s < steps; ++s) {
        stepper.kick(x, stepper.draw_increments(noise));
        stepper.dissipate(x, s + 1 == steps);
        if (std::abs(NoisyStepper::trace(x) - 1.0) > 1e-8) {
            throw StepTooLarge("trajectory: trace drifted beyond 1e-8");
        }
    }
    return stepper.leave(x);
}

namespace {

// Pairwise sum over [begin, end) in index order; independent of thread count.
template <typename T, typename Fn>
T pairwise_sum(std::size_t begin, std::size_t end, const Fn& term) {
    if (end - begin == 1) return term(begin);
    const std::size_t mid = begin + (end - begin) / 2;
    return pairwise_sum<T>(begin, mid, term) + pairwise_sum<T>(mid, end, term);
}

}  // namespace

EnsembleResult run_ensemble(const TrajectoryConfig& cfg) {
    cfg.validate();
    if (std::abs(std::lround(cfg.t_end / cfg.dt) * cfg.dt - cfg.t_end) > 1e-9 * std::max(1.0, cfg.t_end)) {
        throw InvalidParameter("run_ensemble: t_end must be a multiple of dt");
    }
    const NoisyStepper stepper(cfg);
    const auto n = static_cast<std::size_t>(cfg.n_traj);
    std::vector<Mat4> finals(n);
    parallel_for(n, resolve_threads(cfg.threads),
                 [&](std::size_t k) { finals[k] = run_trajectory(stepper, cfg, k); });

    using Moments = Eigen::Matrix<double, 32, 1>;
    auto as_real = [&](std::size_t k) {
        return Moments(Eigen::Map<const Moments>(reinterpret_cast<const double*>(finals[k].data())));
    };
    const Moments mean = pairwise_sum<Moments>(0, n, as_real) / static_cast<double>(n);
    const Moments sq = pairwise_sum<Moments>(0, n, [&](std::size_t k) {
        return Moments((as_real(k) - mean).array().square().matrix());
    });

    EnsembleResult out;
    Mat4 m;
    Eigen::Map<Moments>(reinterpret_cast<double*>(m.data())) = mean;
    out.rho_mean = DensityMatrix(m);
    out.stderr_frobenius = n > 1 ? std::sqrt(sq.sum() / static_cast<double>(n - 1) / n) : 0.0;
    out.n_traj = cfg.n_traj;
    out.t_end = cfg.t_end;
    for (const Mat4& f : finals) {
        out.max_trace_defect = std::max(out.max_trace_defect, std::abs(f.trace() - 1.0));
        out.max_hermiticity_defect = std::max(out.max_hermiticity_defect, hermiticity_defect(f));
    }
    if (cfg.keep_trajectories) out.trajectories = std::move(finals);
    return out;
}

}  // namespace dimerss
