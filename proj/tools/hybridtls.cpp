// hybridtls: driven two-level atom under Lindblad and anti-Hermitian damping.
//
//   hybridtls run --g0t 0.25 --tau-max 20 --out out/
//   hybridtls run --figure 7 --out fig7/
//   hybridtls validate --g0t 0 --gt 0.5
//
// Exit codes: 0 ok, 2 config error, 3 branch/domain error, 4 numerical failure.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hybridtls/cli/config.hpp"
#include "hybridtls/cli/presets.hpp"
#include "hybridtls/cli/scenario.hpp"
#include "hybridtls/cli/validate.hpp"
#include "hybridtls/error.hpp"

namespace {

using namespace htls::cli;

struct Options {
  std::optional<std::string> config;
  std::optional<int> figure;
  std::string out = ".";
  Overrides ov;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON scenario file");
  cmd->add_option("--label", o.ov.label, "output file prefix");
  cmd->add_option("--g0t", o.ov.g0t, "gamma0 / (4 Omega)");
  cmd->add_option("--at", o.ov.at, "alpha / Omega");
  cmd->add_option("--gt", o.ov.gt, "Gamma / Omega");
  cmd->add_option("--tt", o.ov.tt, "gauge shift / Omega");
  cmd->add_option("--n-thermal", o.ov.n_thermal, "thermal occupation N (rk4 only)");
  cmd->add_option("--abar", o.ov.alpha_bar, "at / g0t (strong driving)");
  cmd->add_option("--gbar", o.ov.gamma_bar, "gt / g0t (strong driving)");
  cmd->add_option("--init", o.ov.init, "initial Bloch vector x,y,z");
  cmd->add_option("--tau-max", o.ov.tau_max);
  cmd->add_option("--dt", o.ov.dt, "output sampling step");
  cmd->add_option("--rk-substeps", o.ov.rk_substeps);
  cmd->add_option("--method", o.ov.method, "analytic | expm | rk4");
  cmd->add_option("--output", o.ov.outputs,
                  "trajectory | steady | spectrum-decay | spectrum-periodic (repeatable)");
}

ScenarioConfig assemble(const Options& o) {
  ScenarioConfig cfg = o.config ? load_config(*o.config) : ScenarioConfig{};
  apply(cfg, o.ov);
  return cfg;
}

int exit_code(htls::ErrorKind kind) {
  switch (kind) {
    case htls::ErrorKind::InvalidInput: return 2;
    case htls::ErrorKind::Domain: return 3;
    case htls::ErrorKind::Numerical: return 4;
  }
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven two-level atom with hybrid Lindblad / anti-Hermitian damping"};
  app.require_subcommand(1);

  Options run_opts;
  CLI::App* run = app.add_subcommand("run", "compute trajectories, steady states, spectra");
  add_common(run, run_opts);
  run->add_option("--figure", run_opts.figure, "figure preset 1..9");
  run->add_option("--out", run_opts.out, "output directory");

  Options val_opts;
  CLI::App* val = app.add_subcommand("validate", "report which solution paths apply");
  add_common(val, val_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      if (run_opts.figure) {
        for (const auto& f : run_figure(*run_opts.figure, run_opts.out)) {
          std::cout << f.string() << '\n';
        }
        return 0;
      }
      const RunResult r = run_scenario(assemble(run_opts), run_opts.out);
      for (const auto& w : r.warnings) {
        std::cerr << "warning: " << w << '\n';
      }
      for (const auto& f : r.files) {
        std::cout << f.string() << '\n';
      }
      return 0;
    }
    for (const auto& line : validate(assemble(val_opts))) {
      std::cout << line << '\n';
    }
    return 0;
  } catch (const htls::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
