#include <cmath>

#include <doctest.h>

#include "hybridtls/analytic.hpp"
#include "hybridtls/error.hpp"
#include "hybridtls/observables.hpp"
#include "hybridtls/spectral.hpp"

using namespace htls;

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

}  // namespace

TEST_CASE("constant signal has no regular part") {
  const DecaySpectrum s = regular_ft_decaying([](double) { return 0.25; }, 0.25, {0.0, 1.0, 5.0});
  for (const Complex& v : s.values) {
    CHECK(std::abs(v) == 0.0);
  }
  CHECK(phase_series(s).zero_modulus[0]);
  CHECK(phase_series(s).phases[0] == 0.0);
}

TEST_CASE("decaying exponentials against the analytic transform") {
  const DecaySpectrum unit =
      regular_ft_decaying([](double t) { return std::exp(-t); }, 0.0, {0.0});
  CHECK(unit.values[0].real() == doctest::Approx(kInvSqrt2Pi).epsilon(1e-6));

  const std::vector<double> omegas = omega_grid(10.0, 0.25);
  double worst = 0.0;
  for (double a : {0.5, 1.0, 2.0}) {
    const DecaySpectrum s = regular_ft_decaying([a](double t) { return std::exp(-a * t); }, 0.0, omegas);
    for (std::size_t k = 0; k < omegas.size(); ++k) {
      const Complex exact = kInvSqrt2Pi / Complex(a, -omegas[k]);
      worst = std::max(worst, std::abs(s.values[k] - exact) / std::abs(exact));
    }
  }
  CHECK(worst < 1e-4);

  const DecaySpectrum far = regular_ft_decaying([](double t) { return std::exp(-t); }, 0.0,
                                                {1.0, 10.0, 100.0});
  const PhaseSeries ph = phase_series(far);
  CHECK(ph.phases[0] == doctest::Approx(std::atan(1.0)).epsilon(1e-5));
  CHECK(ph.phases[1] == doctest::Approx(std::atan(10.0)).epsilon(1e-5));
  CHECK(ph.phases[2] > M_PI / 2 - 0.02);
}

TEST_CASE("regular transform is linear") {
  auto f = [](double t) { return std::exp(-0.7 * t) * std::cos(2.0 * t); };
  auto g = [](double t) { return std::exp(-1.3 * t); };
  const std::vector<double> omegas = {0.0, 0.5, 3.0};
  const DecaySpectrum sf = regular_ft_decaying(f, 0.0, omegas);
  const DecaySpectrum sg = regular_ft_decaying(g, 0.0, omegas);
  const DecaySpectrum sh =
      regular_ft_decaying([&](double t) { return 2.0 * f(t) - 0.5 * g(t); }, 0.0, omegas);
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    CHECK(std::abs(sh.values[k] - (2.0 * sf.values[k] - 0.5 * sg.values[k])) < 1e-6);
  }
}

TEST_CASE("non-decaying signal is rejected") {
  DecayOptions opts;
  opts.horizon_limit = 2e3;
  CHECK_THROWS_WITH_AS(regular_ft_decaying([](double t) { return std::sin(t); }, 0.0, {1.0}, opts),
                       "signal not decaying", Error);
  CHECK_THROWS_AS(regular_ft_decaying([](double t) { return std::exp(-t); }, 0.0, {2.0, 1.0}), Error);
}

TEST_CASE("periodic coefficients") {
  const PeriodicSpectrum c = fourier_coefficients_periodic([](double) { return 0.3; }, 2.0, 4);
  CHECK(c.coefficients[0].real() == doctest::Approx(0.3));
  for (int n = 1; n <= 4; ++n) {
    CHECK(std::abs(c.coefficients[n]) < 1e-15);
  }

  const PeriodicSpectrum rabi =
      fourier_coefficients_periodic([](double t) { return 0.5 * (1 - std::cos(t)); }, 2 * M_PI, 3);
  CHECK(std::abs(rabi.coefficients[0]) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(rabi.coefficients[1]) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(rabi.coefficients[2]) <= 1e-6);

  CHECK_THROWS_AS(fourier_coefficients_periodic([](double) { return 0.0; }, 0.0, 3), Error);
  CHECK_THROWS_AS(fourier_coefficients_periodic([](double) { return 0.0; }, 1.0, 3, 1024), Error);
}

TEST_CASE("anharmonic oscillation content") {
  const BlochState4 ground{0, 0, -1, 1};
  const double period = analytic::oscillation_period(0.5);
  auto pe = [&](double t) { return upper_population(analytic::ah_oscillatory(0.5, ground, t)); };
  const PeriodicSpectrum s = fourier_coefficients_periodic(pe, period, 64);
  CHECK(std::abs(s.coefficients[1]) > std::abs(s.coefficients[2]));
  CHECK(std::abs(s.coefficients[2]) > std::abs(s.coefficients[3]));
  CHECK(std::abs(s.coefficients[3]) > std::abs(s.coefficients[4]));
  CHECK(std::abs(s.coefficients[3]) > 1e-3);

  // Parseval with both signs of n
  double energy = 0.0;
  const int samples = 8192;
  for (int k = 0; k < samples; ++k) {
    const double v = pe(period * k / samples);
    energy += v * v / samples;
  }
  double sum = std::norm(s.coefficients[0]);
  for (std::size_t n = 1; n < s.coefficients.size(); ++n) {
    sum += 2.0 * std::norm(s.coefficients[n]);
  }
  CHECK(sum <= energy + 1e-6);
  CHECK(sum == doctest::Approx(energy).epsilon(1e-9));
}

TEST_CASE("principal phase") {
  CHECK(principal_phase({1, 0}) == 0.0);
  CHECK(principal_phase({0, 1}) == doctest::Approx(M_PI / 2));
  CHECK(principal_phase({-1, -0.0}) == M_PI);
  CHECK(principal_phase({-1, 0}) == M_PI);
  CHECK(principal_phase({0, -1}) == doctest::Approx(-M_PI / 2));
}

TEST_CASE("omega grid") {
  const auto g = omega_grid(20.0, 0.02);
  CHECK(g.size() == 1001);
  CHECK(g.back() == doctest::Approx(20.0));
  CHECK(omega_grid(1.0, 0.3).size() == 4);
  CHECK_THROWS_AS(omega_grid(1.0, 0.0), Error);
}
