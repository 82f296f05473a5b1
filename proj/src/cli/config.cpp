#include "hybridtls/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hybridtls/error.hpp"

namespace htls::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) {
    bad(where + " must be an object");
  }
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      bad("unknown key '" + item.key() + "' in " + where);
    }
  }
}

double number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number()) {
    bad(std::string("'") + key + "' must be a number");
  }
  return v.get<double>();
}

int integer(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    bad(std::string("'") + key + "' must be an integer");
  }
  return v.get<int>();
}

NormalizedBloch parse_init(const std::string& text) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(part, &used));
      if (used != part.size()) {
        bad("--init expects x,y,z");
      }
    } catch (const std::logic_error&) {
      bad("--init expects x,y,z");
    }
  }
  if (xs.size() != 3) {
    bad("--init expects x,y,z");
  }
  return {xs[0], xs[1], xs[2]};
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::analytic: return "analytic";
    case Method::expm: return "expm";
    case Method::rk4: return "rk4";
  }
  return "?";
}

std::string to_string(Output o) {
  switch (o) {
    case Output::trajectory: return "trajectory";
    case Output::steady: return "steady";
    case Output::spectrum_decay: return "spectrum-decay";
    case Output::spectrum_periodic: return "spectrum-periodic";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "analytic") return Method::analytic;
  if (s == "expm") return Method::expm;
  if (s == "rk4") return Method::rk4;
  bad("unknown method '" + s + "' (analytic, expm, rk4)");
}

Output parse_output(const std::string& s) {
  if (s == "trajectory") return Output::trajectory;
  if (s == "steady") return Output::steady;
  if (s == "spectrum-decay") return Output::spectrum_decay;
  if (s == "spectrum-periodic") return Output::spectrum_periodic;
  bad("unknown output '" + s + "'");
}

bool ScenarioConfig::wants(Output o) const {
  return std::find(outputs.begin(), outputs.end(), o) != outputs.end();
}

ScenarioConfig config_from_json(const json& doc) {
  reject_unknown(doc, {"label", "params", "physical", "strong_driving", "init", "method", "evolve",
                       "outputs", "spectrum", "picture", "omega0"},
                 "config");
  ScenarioConfig cfg;
  try {
    if (doc.contains("label")) {
      cfg.label = doc.at("label").get<std::string>();
    }
    const int sources = static_cast<int>(doc.contains("params")) +
                        static_cast<int>(doc.contains("physical")) +
                        static_cast<int>(doc.contains("strong_driving"));
    if (sources > 1) {
      bad("give only one of params, physical, strong_driving");
    }
    if (doc.contains("params")) {
      const json& p = doc.at("params");
      reject_unknown(p, {"g0t", "at", "gt", "tt", "n_thermal"}, "params");
      cfg.params = {number(p, "g0t", 0.0), number(p, "at", 0.0), number(p, "gt", 0.0),
                    number(p, "tt", 0.0), number(p, "n_thermal", 0.0)};
    }
    if (doc.contains("physical")) {
      const json& p = doc.at("physical");
      reject_unknown(p, {"omega", "omega0", "gamma0", "n_thermal", "alpha", "gamma_cap", "gauge_t"},
                     "physical");
      PhysicalParams phys;
      phys.omega = number(p, "omega", 1.0);
      phys.omega0 = number(p, "omega0", 0.0);
      phys.gamma0 = number(p, "gamma0", 0.0);
      phys.n_thermal = number(p, "n_thermal", 0.0);
      phys.alpha = number(p, "alpha", 0.0);
      phys.gamma_cap = number(p, "gamma_cap", 0.0);
      phys.gauge_t = number(p, "gauge_t", 0.0);
      cfg.params = reduce(phys);
      cfg.physical = phys;
      cfg.omega0 = phys.omega0 / phys.omega;
    }
    if (doc.contains("strong_driving")) {
      const json& p = doc.at("strong_driving");
      reject_unknown(p, {"g0t", "alpha_bar", "gamma_bar"}, "strong_driving");
      const double g = number(p, "g0t", 0.0);
      cfg.params.g0t = g;
      cfg.params.at = g * number(p, "alpha_bar", 0.0);
      cfg.params.gt = g * number(p, "gamma_bar", 0.0);
    }
    if (doc.contains("init")) {
      const auto v = doc.at("init").get<std::vector<double>>();
      if (v.size() != 3) {
        bad("init must be [x, y, z]");
      }
      cfg.init = {v[0], v[1], v[2]};
    }
    if (doc.contains("method")) {
      cfg.method = parse_method(doc.at("method").get<std::string>());
    }
    if (doc.contains("evolve")) {
      const json& e = doc.at("evolve");
      reject_unknown(e, {"tau_max", "dt", "rk_substeps"}, "evolve");
      cfg.evolve.tau_max = number(e, "tau_max", cfg.evolve.tau_max);
      cfg.evolve.dt = number(e, "dt", cfg.evolve.dt);
      cfg.evolve.rk_substeps = integer(e, "rk_substeps", cfg.evolve.rk_substeps);
    }
    if (doc.contains("outputs")) {
      cfg.outputs.clear();
      for (const auto& o : doc.at("outputs").get<std::vector<std::string>>()) {
        cfg.outputs.push_back(parse_output(o));
      }
    }
    if (doc.contains("spectrum")) {
      const json& s = doc.at("spectrum");
      reject_unknown(s, {"omega_max", "omega_step", "tail_eps", "n_max", "samples_per_period"},
                     "spectrum");
      cfg.spectrum.omega_max = number(s, "omega_max", cfg.spectrum.omega_max);
      cfg.spectrum.omega_step = number(s, "omega_step", cfg.spectrum.omega_step);
      cfg.spectrum.tail_eps = number(s, "tail_eps", cfg.spectrum.tail_eps);
      cfg.spectrum.n_max = integer(s, "n_max", cfg.spectrum.n_max);
      cfg.spectrum.samples_per_period =
          integer(s, "samples_per_period", cfg.spectrum.samples_per_period);
    }
    if (doc.contains("picture")) {
      const auto pic = doc.at("picture").get<std::string>();
      if (pic != "interaction" && pic != "schrodinger") {
        bad("picture must be 'interaction' or 'schrodinger'");
      }
      cfg.schrodinger = pic == "schrodinger";
    }
    cfg.omega0 = number(doc, "omega0", cfg.omega0);
  } catch (const json::exception& e) {
    bad(std::string("config: ") + e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    bad("cannot open config " + path.string());
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
  return config_from_json(doc);
}

void apply(ScenarioConfig& cfg, const Overrides& ov) {
  if (ov.label) cfg.label = *ov.label;
  if (ov.g0t) cfg.params.g0t = *ov.g0t;
  if (ov.at) cfg.params.at = *ov.at;
  if (ov.gt) cfg.params.gt = *ov.gt;
  if (ov.tt) cfg.params.tt = *ov.tt;
  if (ov.n_thermal) cfg.params.n_thermal = *ov.n_thermal;
  // barred rates are relative to g0t, so they go after it
  if (ov.alpha_bar) cfg.params.at = cfg.params.g0t * *ov.alpha_bar;
  if (ov.gamma_bar) cfg.params.gt = cfg.params.g0t * *ov.gamma_bar;
  if (ov.init) cfg.init = parse_init(*ov.init);
  if (ov.tau_max) cfg.evolve.tau_max = *ov.tau_max;
  if (ov.dt) cfg.evolve.dt = *ov.dt;
  if (ov.rk_substeps) cfg.evolve.rk_substeps = *ov.rk_substeps;
  if (ov.method) cfg.method = parse_method(*ov.method);
  if (!ov.outputs.empty()) {
    cfg.outputs.clear();
    for (const auto& o : ov.outputs) {
      cfg.outputs.push_back(parse_output(o));
    }
  }
}

void check(const ScenarioConfig& cfg) {
  htls::check(cfg.params);
  htls::check(cfg.evolve);
  if (cfg.label.empty() || cfg.label.find_first_of("/\\") != std::string::npos) {
    bad("label must be a non-empty file-name fragment");
  }
  const NormalizedBloch& i = cfg.init;
  if (!std::isfinite(i.x) || !std::isfinite(i.y) || !std::isfinite(i.z) ||
      bloch_norm_sq(i) > 1.0 + 1e-12) {
    bad("initial Bloch vector must lie in the unit ball");
  }
  if (cfg.outputs.empty()) {
    bad("no outputs requested");
  }
  const SpectrumConfig& s = cfg.spectrum;
  if (!(s.omega_max >= 0.0) || !(s.omega_step > 0.0) || !(s.tail_eps > 0.0) || s.n_max < 0 ||
      s.samples_per_period < 2048) {
    bad("spectrum settings out of range");
  }
  const bool spectra = cfg.wants(Output::spectrum_decay) || cfg.wants(Output::spectrum_periodic);
  if (cfg.method == Method::rk4 && (spectra || cfg.wants(Output::steady))) {
    bad("rk4 supports trajectory output only");
  }
  if (cfg.params.n_thermal > 0.0 && (spectra || cfg.wants(Output::steady))) {
    bad("thermal runs (N > 0) support trajectory output only");
  }
  if (cfg.params.n_thermal > 0.0 && cfg.method != Method::rk4) {
    bad("thermal runs (N > 0) need method rk4");
  }
  if (!std::isfinite(cfg.omega0)) {
    bad("omega0 must be finite");
  }
}

json params_json(const ReducedParams& rp) {
  return {{"g0t", rp.g0t}, {"at", rp.at}, {"gt", rp.gt}, {"tt", rp.tt}, {"n_thermal", rp.n_thermal}};
}

}  // namespace htls::cli
