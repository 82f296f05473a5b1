#include "hybridtls/analytic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hybridtls/error.hpp"

namespace htls::analytic {

namespace {

constexpr double kKappaFloor = 1e-12;
constexpr double kLambda4Floor = 1e-10;
constexpr double kAlphaFloor = 1e-12;
constexpr double kRealityTolerance = 1e-10;
constexpr double kSdWarnLevel = 0.3;

void require_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::InvalidInput, "parameters must be finite");
    }
  }
}

// Imaginary parts cancel analytically; anything left is round-off unless the
// formula has been fed a point it cannot represent.
double real_part(Complex z) {
  if (std::abs(z.imag()) > kRealityTolerance * std::max(1.0, std::abs(z.real()))) {
    throw Error(ErrorKind::Numerical, "closed form lost reality");
  }
  return z.real();
}

Matrix4 to_real(const Eigen::Matrix4cd& m) {
  Matrix4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out(i, j) = real_part(m(i, j));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

LindbladAux lindblad_aux(double g0t) {
  require_finite({g0t});
  return {std::sqrt(Complex(1.0 - g0t * g0t, 0.0)), 1.0 + 1.0 / (2.0 * g0t * g0t)};
}

EigenQuad lindblad_eigenvalues(double g0t) {
  const Complex kappa = lindblad_aux(g0t).kappa;
  const Complex i{0.0, 1.0};
  return {Complex(-2.0 * g0t), -3.0 * g0t - i * kappa, -3.0 * g0t + i * kappa, Complex(0.0)};
}

Matrix4 lindblad_solution_matrix(double g0t, double tau) {
  require_finite({tau});
  const Complex kappa = lindblad_aux(g0t).kappa;
  if (std::abs(kappa) < kKappaFloor) {
    throw Error(ErrorKind::Domain, "degenerate κ; use expm4 path");
  }
  const double g = g0t;
  const double e = std::exp(-3.0 * g * tau);
  const Complex c = std::cos(kappa * tau);
  const Complex sk = std::sin(kappa * tau) / kappa;
  auto f = [&](double k) { return c + k * g * sk; };
  const double den = 8.0 * g * g + 1.0;

  Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
  s(0, 0) = std::exp(-2.0 * g * tau);
  s(1, 1) = f(1.0) * e;
  s(1, 2) = sk * e;
  s(1, 3) = 4.0 * g / den * (f(3.0) * e - 1.0);
  s(2, 1) = -sk * e;
  s(2, 2) = f(-1.0) * e;
  // 8g^2 f_{-nu^2} = 8g^2 cos - (8g^2 + 4) g sin/kappa, finite at g = 0
  s(2, 3) = (8.0 * g * g * (c * e - 1.0) - (8.0 * g * g + 4.0) * g * sk * e) / den;
  s(3, 3) = 1.0;
  return to_real(s);
}

BlochState4 lindblad_solution(double g0t, const BlochState4& b0, double tau) {
  return BlochState4::from(lindblad_solution_matrix(g0t, tau) * b0.vec());
}

NormalizedBloch lindblad_steady(double g0t) {
  require_finite({g0t});
  if (!(g0t > 0.0)) {
    throw Error(ErrorKind::Domain, "no unique steady state (undamped)");
  }
  const double pre = -4.0 * g0t / (8.0 * g0t * g0t + 1.0);
  return {0.0, pre, pre * 2.0 * g0t};
}

// ---------------------------------------------------------------------------

AHAux ah_eigenvalues(double at, double gt) {
  require_finite({at, gt});
  AHAux aux;
  aux.r_plus = at * at + (gt * gt - 1.0);
  aux.r_minus = at * at - (gt * gt - 1.0);
  aux.r1 = std::sqrt(aux.r_plus * aux.r_plus + 4.0 * at * at);
  aux.k_plus = aux.r1 + aux.r_minus;
  aux.k_minus = aux.r1 - aux.r_minus;
  const Complex l2 = std::sqrt(Complex(0.5 * (aux.r_plus - aux.r1), 0.0));
  const double l4 = std::sqrt(std::max(0.0, 0.5 * (aux.r_plus + aux.r1)));
  aux.lambdas = {-l2, l2, Complex(-l4), Complex(l4)};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  aux.lambda_bar2 = std::abs(l2) > 0.0 ? l2 + 1.0 / l2 : Complex(nan, nan);
  aux.lambda_bar4 = l4 > 0.0 ? Complex(l4 + 1.0 / l4) : Complex(nan);
  return aux;
}

Matrix4 ah_solution_matrix(double at, double gt, double tau) {
  require_finite({tau});
  const AHAux aux = ah_eigenvalues(at, gt);
  if (aux.lambda4() < kLambda4Floor) {
    throw Error(ErrorKind::Domain, "oscillatory regime; use ah_oscillatory");
  }
  if (std::abs(at) < kAlphaFloor) {
    throw Error(ErrorKind::Domain, "α̃=0 entries singular; use expm4 path");
  }
  const Complex l2 = aux.lambda2();
  const Complex l4 = aux.lambda4();
  const Complex lb2 = aux.lambda_bar2;
  const Complex lb4 = aux.lambda_bar4;
  const Complex ch2 = std::cosh(l2 * tau);
  const Complex ch4 = std::cosh(l4 * tau);
  const Complex sh2 = std::sinh(l2 * tau);
  const Complex sh4 = std::sinh(l4 * tau);
  auto C = [&](Complex k1, Complex k2) { return k1 * ch2 + k2 * ch4; };
  auto S = [&](Complex k1, Complex k2) { return k1 * sh2 + k2 * sh4; };
  const double a = at;
  const double g = gt;
  const double km = aux.k_minus;
  const double kp = aux.k_plus;

  Eigen::Matrix4cd s;
  // clang-format off
  s << 0.5 * C(km, kp),                g * a * S(-1.0 / l2, 1.0 / l4), a * g * C(1.0, -1.0),   a * S(lb2, -lb4),
       l2 * l4 * g / a * S(-l4, l2),   C(l4 * lb4, -l2 * lb2),         -l2 * l4 * S(lb4, -lb2), -g * C(1.0, -1.0),
       a * g * C(1.0, -1.0),           l2 * l4 * S(lb4, -lb2),         0.5 * C(kp, km),         g * S(-l2, l4),
       -1.0 / (2.0 * a) * S(l2 * km, l4 * kp), g * C(1.0, -1.0),       g * S(-l2, l4),          C(-l2 * lb2, l4 * lb4);
  // clang-format on
  return to_real(s / aux.r1);
}

BlochState4 ah_solution(double at, double gt, const BlochState4& b0, double tau) {
  return BlochState4::from(ah_solution_matrix(at, gt, tau) * b0.vec());
}

NormalizedBloch ah_normalized(double at, double gt, const BlochState4& b0, double tau) {
  const BlochState4 state = ah_solution(at, gt, b0, tau);
  if (!(state.tr > kTraceFloor)) {
    throw Error(ErrorKind::Numerical, "trace collapse");
  }
  return normalize(state);
}

NormalizedBloch ah_steady(double at, double gt) {
  const AHAux aux = ah_eigenvalues(at, gt);
  const double l4 = aux.lambda4();
  if (l4 < kLambda4Floor) {
    throw Error(ErrorKind::Domain, "oscillatory regime; no steady state");
  }
  const double lb4 = aux.lambda_bar4.real();
  const double den = l4 * lb4;
  return {-at * lb4 / den, gt / den, l4 * gt / den};
}

double oscillation_frequency(double gt) {
  require_finite({gt});
  if (!(std::abs(gt) < 1.0)) {
    throw Error(ErrorKind::Domain, "not oscillatory (|gt| >= 1)");
  }
  return std::sqrt(1.0 - gt * gt);
}

double oscillation_period(double gt) { return 2.0 * M_PI / oscillation_frequency(gt); }

namespace {

struct OscTerms {
  Eigen::Vector3d numerator;
  double trace_numerator;  // T; the trace itself is T / w^2
  double w;
};

// Derived from the conserved combination tr - gt <sigma2> and checked
// against e^{M tau} entrywise.
OscTerms oscillatory_terms(double gt, const BlochState4& b0, double tau) {
  require_finite({tau});
  const double w = oscillation_frequency(gt);
  if (!(b0.tr > kTraceFloor)) {
    throw Error(ErrorKind::InvalidInput, "initial trace must be positive");
  }
  const double s1 = b0.s1 / b0.tr;
  const double s2 = b0.s2 / b0.tr;
  const double s3 = b0.s3 / b0.tr;
  const double c = std::cos(w * tau);
  const double sn = std::sin(w * tau);
  const double g = gt;
  OscTerms t;
  t.w = w;
  t.numerator = {w * w * s1,
                 g - g * g * s2 - (g - s2) * c + w * s3 * sn,
                 w * w * s3 * c + w * (g - s2) * sn};
  t.trace_numerator = 1.0 - g * s2 - g * (g - s2) * c + g * w * s3 * sn;
  return t;
}

}  // namespace

NormalizedBloch ah_oscillatory(double gt, const BlochState4& b0, double tau) {
  const OscTerms t = oscillatory_terms(gt, b0, tau);
  if (!(t.trace_numerator > kTraceFloor)) {
    throw Error(ErrorKind::Numerical, "trace collapse");
  }
  return NormalizedBloch::from(t.numerator / t.trace_numerator);
}

double ah_oscillatory_trace(double gt, const BlochState4& b0, double tau) {
  const OscTerms t = oscillatory_terms(gt, b0, tau);
  return b0.tr * t.trace_numerator / (t.w * t.w);
}

// ---------------------------------------------------------------------------

StrongDriving strong_driving_from(const ReducedParams& rp) {
  check(rp);
  if (!(rp.g0t > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "strong-driving expansion needs g0t > 0");
  }
  return {rp.g0t, rp.at / rp.g0t, rp.gt / rp.g0t};
}

SDAux sd_aux(const StrongDriving& sd) {
  require_finite({sd.g0t, sd.alpha_bar, sd.gamma_bar});
  SDAux aux;
  aux.chi1 = 1.0 + (2.0 * sd.gamma_bar - 0.5) * sd.g0t * sd.g0t;
  aux.chi2 = 0.25 * sd.alpha_bar * sd.alpha_bar;
  aux.alpha_bar = sd.alpha_bar;
  aux.gamma_bar = sd.gamma_bar;
  return aux;
}

std::vector<std::string> sd_regime_warnings(const StrongDriving& sd) {
  std::vector<std::string> out;
  auto flag = [&](const char* name, double v) {
    if (std::abs(v) > kSdWarnLevel) {
      std::ostringstream msg;
      msg << name << " = " << v << " is not small; strong-driving expansion unreliable";
      out.push_back(msg.str());
    }
  };
  flag("g0t", sd.g0t);
  flag("at", sd.at());
  flag("gt", sd.gt());
  flag("alpha_bar", sd.alpha_bar);
  flag("gamma_bar", sd.gamma_bar);
  return out;
}

EigenQuad sd_eigenvalues(const StrongDriving& sd) {
  const SDAux aux = sd_aux(sd);
  const double g = sd.g0t;
  return {Complex(-2.0 * g - 2.0 * g * aux.chi2), Complex(-3.0 * g, -aux.chi1),
          Complex(-3.0 * g, aux.chi1), Complex(2.0 * g * aux.chi2)};
}

Matrix4 sd_solution_matrix(const StrongDriving& sd, double tau) {
  require_finite({tau});
  const SDAux aux = sd_aux(sd);
  const double g = sd.g0t;
  const double ab = sd.alpha_bar;
  const double a = sd.at();
  const double gc = sd.gt();

  const double e3 = std::exp(-3.0 * g * tau);
  const double e1 = std::exp(-2.0 * g * (1.0 + aux.chi2) * tau);
  const double e4 = std::exp(2.0 * g * aux.chi2 * tau);
  const double c = std::cos(aux.chi1 * tau);
  const double s = std::sin(aux.chi1 * tau);
  const double h1 = 0.5 * (e1 - e4);
  const double h2 = c * e3 - e4;
  const double hp = c + g * s;
  const double hm = c - g * s;

  Matrix4 s0;
  // clang-format off
  s0 << e1,  0.0,       0.0,       0.0,
        0.0, hp * e3,   s * e3,    4.0 * g * h2,
        0.0, -s * e3,   hm * e3,  -4.0 * g * s * e3,
        0.0, 0.0,       0.0,       e4;
  Matrix4 sa;
  sa << 0.0,                0.0, 0.0, h1,
        -4.0 * g * h1,      0.0, 0.0, 0.0,
        -4.0 * g * g * h2,  0.0, 0.0, 0.0,
        h1,                 0.0, 0.0, 0.0;
  Matrix4 sg;
  sg << 0.0,       -ab * h1, a * h2,  0.0,
        ab * h1,    0.0,     0.0,    -h2,
        a * h2,     0.0,     0.0,     s * e3,
        0.0,        h2,      s * e3,  0.0;
  // clang-format on
  return s0 + ab * sa + gc * sg;
}

SDResult sd_solution(const StrongDriving& sd, const BlochState4& b0, double tau) {
  const BlochState4 state = BlochState4::from(sd_solution_matrix(sd, tau) * b0.vec());
  if (!(state.tr > 0.0)) {
    throw Error(ErrorKind::Numerical, "strong-driving normalization non-positive");
  }
  return {state, normalize(state)};
}

NormalizedBloch sd_steady(const StrongDriving& sd) {
  require_finite({sd.g0t, sd.alpha_bar, sd.gamma_bar});
  const double g = sd.g0t;
  return {-0.5 * sd.alpha_bar - 2.0 * sd.at() * sd.gt(), sd.gt() - 4.0 * g,
          2.0 * g * (sd.gt() - 4.0 * g)};
}

}  // namespace htls::analytic
