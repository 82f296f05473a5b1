#include "hybridtls/cli/presets.hpp"

#include <array>

#include "hybridtls/cli/format.hpp"
#include "hybridtls/cli/scenario.hpp"
#include "hybridtls/error.hpp"

namespace htls::cli {

namespace {

using nlohmann::json;

const std::array<const char*, 4> kLineStyles = {"solid", "dashed", "dash-dotted", "dotted"};
const std::array<const char*, 3> kMarkerStyles = {"dots", "squares", "diamonds"};

enum class Sweep { g0t, at, gt };

FigurePreset sweep(int id, std::string observable, Sweep which, const std::vector<double>& values,
                   const std::vector<std::string>& tags, std::vector<Output> outputs) {
  FigurePreset fig;
  fig.id = id;
  fig.observable = std::move(observable);
  for (std::size_t k = 0; k < values.size(); ++k) {
    ScenarioConfig cfg;
    cfg.method = Method::expm;
    cfg.evolve = {20.0, 0.01, 10};
    cfg.outputs = outputs;
    cfg.spectrum.omega_step = 0.02;
    std::string name;
    switch (which) {
      case Sweep::g0t: cfg.params.g0t = values[k]; name = "g0t_"; break;
      case Sweep::at: cfg.params.at = values[k]; name = "at_"; break;
      case Sweep::gt: cfg.params.gt = values[k]; name = "gt_"; break;
    }
    cfg.label = "fig" + std::to_string(id) + "_" + name + tags[k];
    const bool markers = id == 9;
    fig.curves.push_back({markers ? kMarkerStyles[k] : kLineStyles[k], cfg});
  }
  return fig;
}

}  // namespace

FigurePreset figure_preset(int id) {
  const std::vector<Output> traj = {Output::trajectory};
  const std::vector<Output> decay = {Output::trajectory, Output::steady, Output::spectrum_decay};
  switch (id) {
    case 1:
      return sweep(1, "pe", Sweep::g0t, {1.0, 0.25, 0.125, 0.025}, {"1", "1_4", "1_8", "1_40"}, traj);
    case 2:
      return sweep(2, "im_coh", Sweep::g0t, {1.0, 0.25, 0.125, 0.025}, {"1", "1_4", "1_8", "1_40"},
                   traj);
    case 3:
      return sweep(3, "pe", Sweep::at, {4.0, 1.0, 0.5, 0.05}, {"4", "1", "1_2", "1_20"}, traj);
    case 4:
      return sweep(4, "im_coh", Sweep::at, {4.0, 1.0, 0.5, 0.05}, {"4", "1", "1_2", "1_20"}, traj);
    case 5:
      return sweep(5, "pe", Sweep::gt, {2.0, 1.0, 0.9, 0.5}, {"2", "1", "0.9", "1_2"}, traj);
    case 6:
      return sweep(6, "im_coh", Sweep::gt, {2.0, 1.0, 0.9, 0.5}, {"2", "1", "0.9", "1_2"}, traj);
    case 7:
      return sweep(7, "phase", Sweep::g0t, {0.5, 0.25, 0.125, 0.01}, {"1_2", "1_4", "1_8", "1_100"},
                   decay);
    case 8:
      return sweep(8, "phase", Sweep::at, {2.0, 1.0, 0.5, 0.2}, {"2", "1", "1_2", "1_5"}, decay);
    case 9: {
      FigurePreset fig = sweep(9, "modulus", Sweep::gt, {0.999, 0.9, 0.5}, {"0.999", "0.9", "1_2"},
                               {Output::trajectory, Output::spectrum_periodic});
      for (auto& c : fig.curves) {
        c.config.spectrum.n_max = 128;
      }
      return fig;
    }
    default:
      throw Error(ErrorKind::InvalidInput, "figure must be 1..9");
  }
}

std::vector<std::filesystem::path> run_figure(int id, const std::filesystem::path& out_dir) {
  const FigurePreset fig = figure_preset(id);
  std::vector<std::filesystem::path> files;
  json curves = json::array();
  for (const PresetCurve& c : fig.curves) {
    RunResult r = run_scenario(c.config, out_dir);
    files.insert(files.end(), r.files.begin(), r.files.end());
    r.summary["style"] = c.style;
    curves.push_back(r.summary);
  }
  const json manifest = {{"figure", fig.id}, {"observable", fig.observable}, {"curves", curves}};
  const auto path = out_dir / "manifest.json";
  write_json(path, manifest);
  files.push_back(path);
  return files;
}

}  // namespace htls::cli
