#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hybridtls/model.hpp"
#include "hybridtls/pauli.hpp"
#include "hybridtls/propagator.hpp"

namespace htls::cli {

enum class Method { analytic, expm, rk4 };
enum class Output { trajectory, steady, spectrum_decay, spectrum_periodic };

std::string to_string(Method m);
std::string to_string(Output o);
Method parse_method(const std::string& s);
Output parse_output(const std::string& s);

struct SpectrumConfig {
  double omega_max = 20.0;
  double omega_step = 0.05;
  double tail_eps = 1e-8;
  int n_max = 32;
  int samples_per_period = 4096;
};

struct ScenarioConfig {
  std::string label = "run";
  ReducedParams params;
  std::optional<PhysicalParams> physical;  ///< kept for the record when given
  NormalizedBloch init{0.0, 0.0, -1.0};    ///< ground state
  Method method = Method::expm;
  EvolveConfig evolve{20.0, 0.01, 10};
  std::vector<Output> outputs{Output::trajectory};
  SpectrumConfig spectrum;
  bool schrodinger = false;  ///< coherence columns in the Schroedinger picture
  double omega0 = 0.0;       ///< transition frequency over Rabi frequency

  BlochState4 initial_state() const { return {init.x, init.y, init.z, 1.0}; }
  bool wants(Output o) const;
};

/// Flat command-line overrides; unset fields leave the config alone.
struct Overrides {
  std::optional<std::string> label;
  std::optional<double> g0t, at, gt, tt, n_thermal;
  std::optional<double> alpha_bar, gamma_bar;
  std::optional<std::string> init;
  std::optional<double> tau_max, dt;
  std::optional<int> rk_substeps;
  std::optional<std::string> method;
  std::vector<std::string> outputs;
};

/// Throws InvalidInput on unknown keys, wrong types or bad values.
ScenarioConfig config_from_json(const nlohmann::json& doc);
ScenarioConfig load_config(const std::filesystem::path& path);
void apply(ScenarioConfig& cfg, const Overrides& ov);

/// Structural checks shared by run and validate.
void check(const ScenarioConfig& cfg);

nlohmann::json params_json(const ReducedParams& rp);

}  // namespace htls::cli
