#pragma once

#include <functional>
#include <vector>

#include "hybridtls/pauli.hpp"

namespace htls {

/// A real observable as a function of rescaled time. Must tolerate repeated
/// calls at arbitrary tau inside its domain.
using RealSampler = std::function<double(double)>;

struct DecaySpectrum {
  std::vector<double> omegas;
  std::vector<Complex> values;
  double t_max = 0.0;  ///< integration cutoff actually used
};

struct DecayOptions {
  double tail_eps = 1e-8;
  double coarse_step = 0.05;   ///< grid for the tail search
  double horizon_limit = 1e5;  ///< give up past this tau
};

/// Cutoff beyond which |f - f_inf| stays below tail_eps * max|f - f_inf|:
/// the search stops once tau reaches 2 t_last + 10, t_last being the last
/// coarse sample above threshold, and returns that tau. Throws Numerical
/// ("signal not decaying") past horizon_limit.
double decay_cutoff(const RealSampler& f, double f_inf, const DecayOptions& opts = {});

/// (1/sqrt(2 pi)) int_0^{T_max} (f - f_inf) e^{i omega tau} dtau on a
/// uniform grid of step <= min(0.01, pi/(10 max omega)); trapezoid with
/// Gregory end corrections through fourth differences.
DecaySpectrum regular_ft_decaying(const RealSampler& f, double f_inf,
                                  const std::vector<double>& omegas,
                                  const DecayOptions& opts = {});

struct PeriodicSpectrum {
  std::vector<int> wavenumbers;
  std::vector<Complex> coefficients;
};

/// c_n = (1/T) int_0^T f e^{2 pi i n tau / T} dtau for n = 0..n_max, by the
/// rectangle rule (spectrally accurate for smooth periodic f).
PeriodicSpectrum fourier_coefficients_periodic(const RealSampler& f, double period, int n_max,
                                               int samples_per_period = 4096);

struct PhaseSeries {
  std::vector<double> phases;      ///< principal values in (-pi, pi]
  std::vector<bool> zero_modulus;  ///< phase forced to 0 at these samples
};

double principal_phase(Complex z);

PhaseSeries phase_series(const std::vector<Complex>& values);
PhaseSeries phase_series(const DecaySpectrum& spec);

/// 0, step, 2 step, ... up to omega_max inclusive (to 1e-9 relative).
std::vector<double> omega_grid(double omega_max, double step);

}  // namespace htls
