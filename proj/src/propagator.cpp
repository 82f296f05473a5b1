#include "hybridtls/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hybridtls/error.hpp"

namespace htls {

namespace {

constexpr double kMaxTotalSteps = 1e8;

// Chunk length for renormalized propagation: keeps ||M|| * step <= 50 so a
// single chunk can neither overflow nor underflow the state.
double chunk_step(const Matrix4& m, double preferred) {
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  return norm * preferred > 50.0 ? 50.0 / norm : preferred;
}

Eigen::Vector4d rescaled(const Eigen::Vector4d& v) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (!std::isfinite(scale) || scale == 0.0) {
    throw Error(ErrorKind::Numerical, "trace collapse");
  }
  return v / scale;
}

void append_sample(Trajectory& traj, double tau, const BlochState4& state) {
  traj.taus.push_back(tau);
  traj.states.push_back(state);
  traj.normalized.push_back(normalize(state));
}

}  // namespace

void check(const EvolveConfig& cfg) {
  if (!(cfg.tau_max > 0.0) || !std::isfinite(cfg.tau_max)) {
    throw Error(ErrorKind::InvalidInput, "tau_max must be positive");
  }
  if (!(cfg.dt > 0.0) || cfg.dt > cfg.tau_max) {
    throw Error(ErrorKind::InvalidInput, "dt must satisfy 0 < dt <= tau_max");
  }
  if (cfg.rk_substeps < 1) {
    throw Error(ErrorKind::InvalidInput, "rk_substeps must be at least 1");
  }
  if (static_cast<double>(cfg.rk_substeps) * (cfg.tau_max / cfg.dt) > kMaxTotalSteps) {
    throw Error(ErrorKind::InvalidInput, "step count exceeds 1e8");
  }
}

std::vector<double> sample_times(const EvolveConfig& cfg) {
  check(cfg);
  const double ratio = cfg.tau_max / cfg.dt;
  const double rounded = std::round(ratio);
  const auto steps = static_cast<std::size_t>(
      std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, ratio) ? rounded : std::floor(ratio));
  std::vector<double> taus(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    taus[k] = static_cast<double>(k) * cfg.dt;
  }
  return taus;
}

Trajectory evolve_linear(const ReducedParams& rp, const BlochState4& b0,
                         const EvolveConfig& cfg) {
  const Matrix4 m = build_m(rp);
  const std::vector<double> taus = sample_times(cfg);
  Trajectory traj;
  if (std::abs(b0.tr - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "initial trace " << b0.tr << " differs from 1";
    traj.warnings.push_back(msg.str());
  }
  traj.taus.reserve(taus.size());
  traj.states.reserve(taus.size());
  traj.normalized.reserve(taus.size());
  const Eigen::Vector4d v0 = b0.vec();
  for (double tau : taus) {
    append_sample(traj, tau, BlochState4::from(expm4(m, tau) * v0));
  }
  return traj;
}

Trajectory evolve_rk4(const ReducedParams& rp, const DensityMatrix2& rho0,
                      const EvolveConfig& cfg) {
  check(rp);
  const std::vector<double> taus = sample_times(cfg);
  BlochState4 start = decompose(rho0);
  if (!(start.tr > kTraceFloor)) {
    throw Error(ErrorKind::InvalidInput, "initial trace must be positive");
  }

  Trajectory traj;
  traj.taus.reserve(taus.size());
  traj.states.reserve(taus.size());
  traj.normalized.reserve(taus.size());
  append_sample(traj, 0.0, start);

  const double h = cfg.dt / cfg.rk_substeps;
  DensityMatrix2 rho = rho0;
  for (std::size_t k = 1; k < taus.size(); ++k) {
    for (int s = 0; s < cfg.rk_substeps; ++s) {
      const DensityMatrix2 k1 = master_rhs(rho, rp);
      const DensityMatrix2 k2 = master_rhs(rho + 0.5 * h * k1, rp);
      const DensityMatrix2 k3 = master_rhs(rho + 0.5 * h * k2, rp);
      const DensityMatrix2 k4 = master_rhs(rho + h * k3, rp);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      rho = hermitize(rho);
    }
    if (!rho.allFinite()) {
      throw Error(ErrorKind::Numerical, "integration diverged");
    }
    const BlochState4 state = decompose(rho);
    if (!(state.tr > kTraceFloor)) {
      throw Error(ErrorKind::Numerical, "trace collapse");
    }
    append_sample(traj, taus[k], state);
  }
  return traj;
}

NormalizedBloch steady_state(const ReducedParams& rp, const SteadyStateOptions& opts) {
  const Matrix4 m = build_m(rp);
  const double step = chunk_step(m, 1.0);
  const Matrix4 chunk = expm4(m, step);

  Eigen::Vector4d v = BlochState4{0.0, 0.0, -1.0, 1.0}.vec();
  double tau = 0.0;
  auto advance_to = [&](double target) {
    while (tau < target) {
      v = rescaled(chunk * v);
      tau += step;
    }
    return normalize(BlochState4::from(v)).vec();
  };

  Eigen::Vector3d current = advance_to(opts.tau_start);
  for (double target = 2.0 * opts.tau_start; target <= opts.tau_limit; target *= 2.0) {
    const Eigen::Vector3d next = advance_to(target);
    if ((next - current).cwiseAbs().maxCoeff() < opts.tolerance) {
      return NormalizedBloch::from(next);
    }
    current = next;
  }
  throw Error(ErrorKind::Numerical, "no steady state (oscillatory regime?)");
}

FlowSampler::FlowSampler(const Matrix4& m, const BlochState4& b0, double horizon,
                         double anchor_step)
    : m_(m), horizon_(horizon), anchor_step_(chunk_step(m, anchor_step)) {
  if (!(horizon > 0.0) || !std::isfinite(horizon) || !(anchor_step > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "sampler horizon and step must be positive");
  }
  const Matrix4 chunk = expm4(m_, anchor_step_);
  const auto count = static_cast<std::size_t>(std::floor(horizon_ / anchor_step_)) + 1;
  anchors_.reserve(count);
  anchors_.push_back(rescaled(b0.vec()));
  while (anchors_.size() < count) {
    anchors_.push_back(rescaled(chunk * anchors_.back()));
  }
}

NormalizedBloch FlowSampler::at(double tau) const {
  if (!(tau >= 0.0) || tau > horizon_ * (1.0 + 1e-12)) {
    throw Error(ErrorKind::InvalidInput, "sampler queried outside [0, horizon]");
  }
  const auto k = std::min(static_cast<std::size_t>(std::floor(tau / anchor_step_)),
                          anchors_.size() - 1);
  const double rest = tau - static_cast<double>(k) * anchor_step_;
  const Eigen::Vector4d v = expm4(m_, rest) * anchors_[k];
  return normalize(BlochState4::from(v));
}

}  // namespace htls
