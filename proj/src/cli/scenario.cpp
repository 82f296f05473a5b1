#include "hybridtls/cli/scenario.hpp"

#include <cmath>
#include <memory>

#include "hybridtls/analytic.hpp"
#include "hybridtls/cli/format.hpp"
#include "hybridtls/error.hpp"
#include "hybridtls/observables.hpp"

namespace htls::cli {

namespace an = htls::analytic;
using nlohmann::json;

namespace {

constexpr double kSdLimit = 0.3;

void require_branch(Branch b) {
  if (b == Branch::none) {
    throw Error(ErrorKind::Domain,
                "no closed-form branch: need at = gt = 0 (Lindblad), g0t = 0 (anti-Hermitian), "
                "or all rates <= 0.3 (strong driving), and N = 0");
  }
}

an::StrongDriving strong_driving(const ReducedParams& rp) { return an::strong_driving_from(rp); }

// Unnormalized state from the closed forms, gauge factor included.
BlochState4 analytic_state(Branch branch, const ReducedParams& rp, const BlochState4& b0,
                           double tau) {
  BlochState4 s;
  switch (branch) {
    case Branch::lindblad:
      s = an::lindblad_solution(rp.g0t, b0, tau);
      break;
    case Branch::anti_hermitian:
      s = an::ah_solution(rp.at, rp.gt, b0, tau);
      break;
    case Branch::oscillatory: {
      const NormalizedBloch n = an::ah_oscillatory(rp.gt, b0, tau);
      const double t = an::ah_oscillatory_trace(rp.gt, b0, tau);
      s = {n.x * t, n.y * t, n.z * t, t};
      break;
    }
    case Branch::strong_driving:
      s = an::sd_solution(strong_driving(rp), b0, tau).state;
      break;
    case Branch::none:
      require_branch(branch);
  }
  const double gauge = std::exp(-rp.tt * tau);
  s = {s.s1 * gauge, s.s2 * gauge, s.s3 * gauge, s.tr * gauge};
  if (!std::isfinite(s.s1) || !std::isfinite(s.s2) || !std::isfinite(s.s3) ||
      !std::isfinite(s.tr)) {
    throw Error(ErrorKind::Numerical, "closed form overflow");
  }
  return s;
}

NormalizedBloch analytic_normalized(Branch branch, const ReducedParams& rp, const BlochState4& b0,
                                    double tau) {
  if (branch == Branch::oscillatory) {
    return an::ah_oscillatory(rp.gt, b0, tau);
  }
  return normalize(analytic_state(branch, rp, b0, tau));
}

Trajectory analytic_trajectory(const ScenarioConfig& cfg) {
  const Branch branch = analytic_branch(cfg.params);
  require_branch(branch);
  Trajectory traj;
  if (branch == Branch::strong_driving) {
    traj.warnings = an::sd_regime_warnings(strong_driving(cfg.params));
  }
  const BlochState4 b0 = cfg.initial_state();
  for (double tau : sample_times(cfg.evolve)) {
    const BlochState4 s = analytic_state(branch, cfg.params, b0, tau);
    traj.taus.push_back(tau);
    traj.states.push_back(s);
    traj.normalized.push_back(branch == Branch::oscillatory
                                  ? an::ah_oscillatory(cfg.params.gt, b0, tau)
                                  : normalize(s));
  }
  return traj;
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::lindblad: return "lindblad";
    case Branch::anti_hermitian: return "anti-hermitian";
    case Branch::oscillatory: return "oscillatory";
    case Branch::strong_driving: return "strong-driving";
    case Branch::none: return "none";
  }
  return "?";
}

Branch analytic_branch(const ReducedParams& rp) {
  if (rp.n_thermal != 0.0) {
    return Branch::none;
  }
  if (rp.at == 0.0 && rp.gt == 0.0) {
    return Branch::lindblad;
  }
  if (rp.g0t == 0.0) {
    return rp.at == 0.0 && std::abs(rp.gt) < 1.0 ? Branch::oscillatory : Branch::anti_hermitian;
  }
  if (rp.g0t > 0.0 && rp.g0t <= kSdLimit && std::abs(rp.at) <= kSdLimit &&
      std::abs(rp.gt) <= kSdLimit && std::abs(rp.at / rp.g0t) <= kSdLimit &&
      std::abs(rp.gt / rp.g0t) <= kSdLimit) {
    return Branch::strong_driving;
  }
  return Branch::none;
}

Trajectory compute_trajectory(const ScenarioConfig& cfg) {
  check(cfg);
  switch (cfg.method) {
    case Method::analytic:
      return analytic_trajectory(cfg);
    case Method::expm:
      return evolve_linear(cfg.params, cfg.initial_state(), cfg.evolve);
    case Method::rk4:
      return evolve_rk4(cfg.params, reconstruct(cfg.initial_state()), cfg.evolve);
  }
  throw Error(ErrorKind::InvalidInput, "unknown method");
}

NormalizedBloch compute_steady(const ScenarioConfig& cfg) {
  check(cfg);
  const ReducedParams& rp = cfg.params;
  if (cfg.method != Method::analytic) {
    return steady_state(rp);
  }
  const Branch branch = analytic_branch(rp);
  switch (branch) {
    case Branch::lindblad:
      return an::lindblad_steady(rp.g0t);
    case Branch::anti_hermitian:
      return an::ah_steady(rp.at, rp.gt);
    case Branch::oscillatory:
      throw Error(ErrorKind::Domain, "oscillatory branch (g0t = at = 0, |gt| < 1) has no steady state");
    case Branch::strong_driving:
      return an::sd_steady(strong_driving(rp));
    case Branch::none:
      require_branch(branch);
  }
  throw Error(ErrorKind::Domain, "no closed-form branch");
}

RealSampler population_sampler(const ScenarioConfig& cfg, double horizon) {
  check(cfg);
  const BlochState4 b0 = cfg.initial_state();
  if (cfg.method == Method::analytic) {
    const Branch branch = analytic_branch(cfg.params);
    require_branch(branch);
    const ReducedParams rp = cfg.params;
    return [branch, rp, b0](double tau) {
      return upper_population(analytic_normalized(branch, rp, b0, tau));
    };
  }
  auto flow = std::make_shared<const FlowSampler>(build_m(cfg.params), b0, horizon);
  return [flow](double tau) { return upper_population(flow->at(tau)); };
}

DecaySpectrum compute_decay_spectrum(const ScenarioConfig& cfg) {
  DecayOptions opts;
  opts.tail_eps = cfg.spectrum.tail_eps;
  const double f_inf = upper_population(compute_steady(cfg));
  const RealSampler pe = population_sampler(cfg, opts.horizon_limit + 1.0);
  return regular_ft_decaying(pe, f_inf, omega_grid(cfg.spectrum.omega_max, cfg.spectrum.omega_step),
                             opts);
}

PeriodicSpectrum compute_periodic_spectrum(const ScenarioConfig& cfg) {
  const ReducedParams& rp = cfg.params;
  if (!(rp.g0t == 0.0 && rp.at == 0.0 && std::abs(rp.gt) < 1.0)) {
    throw Error(ErrorKind::Domain, "periodic spectrum needs g0t = at = 0 and |gt| < 1");
  }
  const double period = an::oscillation_period(rp.gt);
  return fourier_coefficients_periodic(population_sampler(cfg, period), period, cfg.spectrum.n_max,
                                       cfg.spectrum.samples_per_period);
}

RunResult run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir) {
  check(cfg);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorKind::InvalidInput, "cannot create " + out_dir.string() + ": " + ec.message());
  }

  RunResult result;
  result.summary = {{"label", cfg.label},
                    {"method", to_string(cfg.method)},
                    {"params", params_json(cfg.params)},
                    {"init", {cfg.init.x, cfg.init.y, cfg.init.z}}};
  auto emit = [&](const std::string& suffix, const std::string& text) {
    const auto path = out_dir / (cfg.label + suffix);
    write_file(path, text);
    result.files.push_back(path);
  };

  if (cfg.wants(Output::trajectory)) {
    const Trajectory traj = compute_trajectory(cfg);
    result.warnings.insert(result.warnings.end(), traj.warnings.begin(), traj.warnings.end());
    emit("_trajectory.csv", trajectory_csv(traj, {cfg.schrodinger, cfg.omega0}));
  }
  if (cfg.wants(Output::steady)) {
    const NormalizedBloch s = compute_steady(cfg);
    json doc = {{"label", cfg.label},
                {"method", to_string(cfg.method)},
                {"params", params_json(cfg.params)},
                {"steady", {{"x", s.x}, {"y", s.y}, {"z", s.z}, {"pe", upper_population(s)}}}};
    emit("_steady.json", doc.dump(2) + "\n");
  }
  if (cfg.wants(Output::spectrum_decay)) {
    const DecaySpectrum spec = compute_decay_spectrum(cfg);
    result.summary["t_max"] = spec.t_max;
    emit("_spectrum_decay.csv", decay_spectrum_csv(spec));
  }
  if (cfg.wants(Output::spectrum_periodic)) {
    const PeriodicSpectrum spec = compute_periodic_spectrum(cfg);
    result.summary["period"] = an::oscillation_period(cfg.params.gt);
    emit("_spectrum_periodic.csv", periodic_spectrum_csv(spec));
  }

  json files = json::array();
  for (const auto& f : result.files) {
    files.push_back(f.filename().string());
  }
  result.summary["files"] = files;
  result.summary["warnings"] = result.warnings;
  return result;
}

}  // namespace htls::cli
