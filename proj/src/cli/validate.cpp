#include "hybridtls/cli/validate.hpp"

#include <cmath>
#include <cstdio>

#include "hybridtls/analytic.hpp"
#include "hybridtls/cli/format.hpp"
#include "hybridtls/cli/scenario.hpp"
#include "hybridtls/error.hpp"

namespace htls::cli {

namespace an = htls::analytic;

namespace {

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::vector<std::string> validate(const ScenarioConfig& cfg) {
  std::vector<std::string> lines;
  try {
    check(cfg);
  } catch (const Error& e) {
    lines.push_back(std::string("config invalid: ") + e.what());
    return lines;
  }
  const ReducedParams& rp = cfg.params;
  lines.push_back("params g0t=" + fmt(rp.g0t) + " at=" + fmt(rp.at) + " gt=" + fmt(rp.gt) +
                  " tt=" + fmt(rp.tt) + " N=" + fmt(rp.n_thermal));

  if (rp.n_thermal > 0.0) {
    lines.push_back("thermal occupation N > 0; rk4 trajectory path only");
    return lines;
  }

  if (rp.at == 0.0 && rp.gt == 0.0) {
    const Complex kappa = an::lindblad_aux(rp.g0t).kappa;
    if (std::abs(kappa) < 1e-12) {
      lines.push_back("κ degenerate; analytic Lindblad path unavailable");
    } else {
      lines.push_back("Lindblad branch; analytic path available");
    }
    if (rp.g0t == 0.0) {
      lines.push_back("undamped Rabi oscillation; period " + fixed4(2.0 * M_PI));
    }
  } else if (rp.g0t == 0.0) {
    if (rp.at == 0.0 && std::abs(rp.gt) < 1.0) {
      lines.push_back("oscillatory AH branch; period " + fixed4(an::oscillation_period(rp.gt)));
    } else if (rp.at == 0.0) {
      lines.push_back("AH branch with at = 0 and |gt| >= 1; closed form singular, expm path only");
    } else {
      lines.push_back("anti-Hermitian branch; analytic path available (lambda4 = " +
                      fmt(an::ah_eigenvalues(rp.at, rp.gt).lambda4()) + ")");
    }
  } else {
    const an::StrongDriving sd = an::strong_driving_from(rp);
    const auto warnings = an::sd_regime_warnings(sd);
    if (warnings.empty()) {
      lines.push_back("strong-driving expansion applicable");
    } else {
      lines.push_back("strong-driving expansion not applicable; expm/rk4 paths only");
      lines.insert(lines.end(), warnings.begin(), warnings.end());
    }
  }

  if (rp.tt != 0.0) {
    lines.push_back("gauge shift tt = " + fmt(rp.tt) + " leaves normalized observables unchanged");
  }
  if (cfg.method == Method::analytic && analytic_branch(rp) == Branch::none) {
    lines.push_back("method analytic unavailable for these parameters");
  }
  return lines;
}

}  // namespace htls::cli
