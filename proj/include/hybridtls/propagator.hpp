#pragma once

#include <string>
#include <vector>

#include "hybridtls/model.hpp"
#include "hybridtls/pauli.hpp"

namespace htls {

/// e^{m tau} by scaling and squaring around a diagonal Pade approximant of
/// degree 3..13, chosen from the 1-norm of m tau. Throws Numerical
/// ("propagator overflow") if any entry of the result leaves [-1e300, 1e300].
Matrix4 expm4(const Matrix4& m, double tau);

struct EvolveConfig {
  double tau_max = 20.0;
  double dt = 0.01;      ///< output sampling step
  int rk_substeps = 1;   ///< RK4 steps per output step
};

/// Throws InvalidInput when the config is inconsistent or exceeds the
/// 1e8 total-step guard.
void check(const EvolveConfig& cfg);

/// Output times k*dt for k = 0..K, K = tau_max/dt (floored unless it is
/// integral to 1e-9).
std::vector<double> sample_times(const EvolveConfig& cfg);

struct Trajectory {
  std::vector<double> taus;
  std::vector<BlochState4> states;
  std::vector<NormalizedBloch> normalized;
  std::vector<std::string> warnings;

  std::size_t size() const { return taus.size(); }
};

/// states[k] = e^{M tau_k} b0 with M = build_m(rp). A non-unit initial
/// trace is allowed but noted in `warnings`.
Trajectory evolve_linear(const ReducedParams& rp, const BlochState4& b0,
                         const EvolveConfig& cfg);

/// Classic fixed-step RK4 on master_rhs (thermal terms included), with the
/// state re-symmetrized after every step.
Trajectory evolve_rk4(const ReducedParams& rp, const DensityMatrix2& rho0,
                      const EvolveConfig& cfg);

struct SteadyStateOptions {
  double tau_start = 1e3;
  double tau_limit = 1e6;
  double tolerance = 1e-10;
};

/// Normalized long-time limit, found by propagating to tau_start and
/// doubling until two successive normalized states agree. Throws Numerical
/// ("no steady state (oscillatory regime?)") past tau_limit.
NormalizedBloch steady_state(const ReducedParams& rp,
                             const SteadyStateOptions& opts = {});

/// Normalized observables of e^{M tau} b0 at arbitrary tau in [0, horizon].
///
/// The unnormalized flow grows or decays exponentially, so states are kept
/// only up to scale: anchors at multiples of `anchor_step` are precomputed
/// and rescaled, and at(tau) propagates exactly from the nearest anchor
/// below. Immutable after construction.
class FlowSampler {
 public:
  FlowSampler(const Matrix4& m, const BlochState4& b0, double horizon,
              double anchor_step = 1.0);

  NormalizedBloch at(double tau) const;
  double horizon() const { return horizon_; }

 private:
  Matrix4 m_;
  double horizon_;
  double anchor_step_;
  std::vector<Eigen::Vector4d> anchors_;
};

}  // namespace htls
