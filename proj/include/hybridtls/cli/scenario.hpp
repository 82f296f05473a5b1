#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hybridtls/cli/config.hpp"
#include "hybridtls/spectral.hpp"

namespace htls::cli {

/// Closed-form family that covers a parameter point, if any.
enum class Branch { lindblad, anti_hermitian, oscillatory, strong_driving, none };

std::string to_string(Branch b);

/// lindblad: at = gt = 0. anti_hermitian: g0t = 0 and not oscillatory.
/// oscillatory: g0t = at = 0, |gt| < 1. strong_driving: g0t > 0 and every
/// rate at most 0.3. none otherwise, or whenever N > 0.
Branch analytic_branch(const ReducedParams& rp);

Trajectory compute_trajectory(const ScenarioConfig& cfg);
NormalizedBloch compute_steady(const ScenarioConfig& cfg);

/// Excited-state population along the configured method, valid on
/// [0, horizon].
RealSampler population_sampler(const ScenarioConfig& cfg, double horizon);

DecaySpectrum compute_decay_spectrum(const ScenarioConfig& cfg);
PeriodicSpectrum compute_periodic_spectrum(const ScenarioConfig& cfg);

struct RunResult {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> warnings;
  nlohmann::json summary;  ///< label, method, params, files, warnings, extras
};

/// Runs every requested output and writes <label>_<output>.{csv,json}
/// into out_dir (created if missing).
RunResult run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace htls::cli
