#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hybridtls/cli/config.hpp"

namespace htls::cli {

struct PresetCurve {
  std::string style;  ///< solid, dashed, dash-dotted, dotted, dots, squares, diamonds
  ScenarioConfig config;
};

struct FigurePreset {
  int id = 0;
  std::string observable;  ///< the quantity plotted against tau, omega or n
  std::vector<PresetCurve> curves;
};

/// Figures 1..9; throws InvalidInput otherwise. All curves start in the
/// ground state and use the expm path over tau in [0, 20].
FigurePreset figure_preset(int id);

/// Runs every curve into out_dir and writes out_dir/manifest.json.
/// Returns the files written, manifest last.
std::vector<std::filesystem::path> run_figure(int id, const std::filesystem::path& out_dir);

}  // namespace htls::cli
