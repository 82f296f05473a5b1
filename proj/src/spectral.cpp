#include "hybridtls/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hybridtls/error.hpp"

namespace htls {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr int kMinPeriodicSamples = 2048;
constexpr int kGregoryOrder = 4;
constexpr std::array<double, kGregoryOrder> kGregory = {1.0 / 12.0, 1.0 / 24.0, 19.0 / 720.0,
                                                        3.0 / 160.0};
// re-anchor the rotating phasor this often
constexpr std::size_t kPhasorRefresh = 1024;

// Forward differences of g at the left end (k = 0..order) and backward
// differences at the right end.
std::array<Complex, kGregoryOrder + 1> end_differences(const std::vector<Complex>& g,
                                                       bool backward) {
  std::array<Complex, kGregoryOrder + 1> work{};
  const std::size_t n = g.size();
  for (int k = 0; k <= kGregoryOrder; ++k) {
    work[k] = backward ? g[n - 1 - k] : g[k];
  }
  std::array<Complex, kGregoryOrder + 1> out{};
  out[0] = work[0];
  for (int order = 1; order <= kGregoryOrder; ++order) {
    for (int k = 0; k + order <= kGregoryOrder; ++k) {
      work[k] = backward ? work[k] - work[k + 1] : work[k + 1] - work[k];
    }
    out[order] = work[0];
  }
  return out;
}

Complex gregory(const std::vector<Complex>& g, double h) {
  Complex sum = 0.5 * (g.front() + g.back());
  for (std::size_t k = 1; k + 1 < g.size(); ++k) {
    sum += g[k];
  }
  Complex result = h * sum;
  const auto fwd = end_differences(g, false);
  const auto bwd = end_differences(g, true);
  for (int k = 1; k <= kGregoryOrder; ++k) {
    const Complex corr = (k % 2 == 1) ? bwd[k] - fwd[k] : bwd[k] + fwd[k];
    result -= h * kGregory[k - 1] * corr;
  }
  return result;
}

}  // namespace

double decay_cutoff(const RealSampler& f, double f_inf, const DecayOptions& opts) {
  if (!(opts.tail_eps > 0.0) || !(opts.coarse_step > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "tail_eps and coarse_step must be positive");
  }
  double peak = 0.0;
  double t_last = 0.0;
  for (std::size_t k = 0;; ++k) {
    const double tau = static_cast<double>(k) * opts.coarse_step;
    if (tau > opts.horizon_limit) {
      throw Error(ErrorKind::Numerical, "signal not decaying");
    }
    const double dev = std::abs(f(tau) - f_inf);
    if (!std::isfinite(dev)) {
      throw Error(ErrorKind::Numerical, "non-finite sample in spectrum input");
    }
    peak = std::max(peak, dev);
    if (dev > opts.tail_eps * peak) {
      t_last = tau;
    }
    if (tau >= 2.0 * t_last + 10.0) {
      return tau;
    }
  }
}

DecaySpectrum regular_ft_decaying(const RealSampler& f, double f_inf,
                                  const std::vector<double>& omegas, const DecayOptions& opts) {
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    if (!std::isfinite(omegas[k]) || omegas[k] < 0.0 || (k > 0 && omegas[k] <= omegas[k - 1])) {
      throw Error(ErrorKind::InvalidInput, "omegas must be non-negative and strictly increasing");
    }
  }
  DecaySpectrum spec;
  spec.omegas = omegas;
  spec.t_max = decay_cutoff(f, f_inf, opts);

  const double omega_max = omegas.empty() ? 0.0 : omegas.back();
  const double h_max = omega_max > 0.0 ? std::min(0.01, M_PI / (10.0 * omega_max)) : 0.01;
  const auto n = std::max<std::size_t>(
      2 * kGregoryOrder + 2, static_cast<std::size_t>(std::ceil(spec.t_max / h_max)));
  const double h = spec.t_max / static_cast<double>(n);

  std::vector<double> g(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    g[k] = f(static_cast<double>(k) * h) - f_inf;
  }

  std::vector<Complex> weighted(n + 1);
  spec.values.reserve(omegas.size());
  for (double omega : omegas) {
    const Complex step = std::polar(1.0, omega * h);
    Complex phasor = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k % kPhasorRefresh == 0) {
        phasor = std::polar(1.0, omega * h * static_cast<double>(k));
      }
      weighted[k] = g[k] * phasor;
      phasor *= step;
    }
    spec.values.push_back(kInvSqrt2Pi * gregory(weighted, h));
  }
  return spec;
}

PeriodicSpectrum fourier_coefficients_periodic(const RealSampler& f, double period, int n_max,
                                               int samples_per_period) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw Error(ErrorKind::InvalidInput, "period must be positive");
  }
  if (n_max < 0) {
    throw Error(ErrorKind::InvalidInput, "n_max must be non-negative");
  }
  if (samples_per_period < kMinPeriodicSamples) {
    throw Error(ErrorKind::InvalidInput, "at least 2048 samples per period required");
  }
  const auto count = static_cast<std::size_t>(samples_per_period);
  std::vector<double> values(count);
  for (std::size_t k = 0; k < count; ++k) {
    values[k] = f(period * static_cast<double>(k) / static_cast<double>(count));
  }

  PeriodicSpectrum spec;
  for (int n = 0; n <= n_max; ++n) {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      // reduce n k mod N first so the angle stays exact
      const std::size_t idx = (static_cast<std::size_t>(n) * k) % count;
      sum += values[k] * std::polar(1.0, 2.0 * M_PI * static_cast<double>(idx) /
                                              static_cast<double>(count));
    }
    spec.wavenumbers.push_back(n);
    spec.coefficients.push_back(sum / static_cast<double>(count));
  }
  return spec;
}

double principal_phase(Complex z) {
  const double p = std::arg(z);
  return p == -M_PI ? M_PI : p;
}

PhaseSeries phase_series(const std::vector<Complex>& values) {
  PhaseSeries out;
  out.phases.reserve(values.size());
  out.zero_modulus.reserve(values.size());
  for (const Complex& v : values) {
    const bool zero = std::abs(v) == 0.0;
    out.zero_modulus.push_back(zero);
    out.phases.push_back(zero ? 0.0 : principal_phase(v));
  }
  return out;
}

PhaseSeries phase_series(const DecaySpectrum& spec) { return phase_series(spec.values); }

std::vector<double> omega_grid(double omega_max, double step) {
  if (!(step > 0.0) || !(omega_max >= 0.0) || !std::isfinite(omega_max)) {
    throw Error(ErrorKind::InvalidInput, "omega grid needs step > 0 and omega_max >= 0");
  }
  const double ratio = omega_max / step;
  const double rounded = std::round(ratio);
  const auto count = static_cast<std::size_t>(
      std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, ratio) ? rounded : std::floor(ratio));
  std::vector<double> grid(count + 1);
  for (std::size_t k = 0; k <= count; ++k) {
    grid[k] = static_cast<double>(k) * step;
  }
  return grid;
}

}  // namespace htls
