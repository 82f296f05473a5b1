#include <cmath>
#include <random>

#include <doctest.h>

#include "hybridtls/analytic.hpp"
#include "hybridtls/error.hpp"
#include "hybridtls/propagator.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace htls;

namespace {

using LMatrix = Eigen::Matrix<long double, 4, 4>;

// Taylor series in long double after halving the argument below 1/2.
Matrix4 taylor_expm(const Matrix4& m, double tau) {
  LMatrix a = (m * tau).cast<long double>();
  int squarings = 0;
  while (a.cwiseAbs().colwise().sum().maxCoeff() > 0.5L) {
    a /= 2.0L;
    ++squarings;
  }
  LMatrix term = LMatrix::Identity();
  LMatrix sum = LMatrix::Identity();
  for (int k = 1; k < 40; ++k) {
    term = term * a / static_cast<long double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) {
    sum = sum * sum;
  }
  return sum.cast<double>();
}

double rel_err(const Matrix4& a, const Matrix4& b) { return (a - b).norm() / b.norm(); }

ReducedParams draw(std::mt19937_64& rng, double hi = 2.0) {
  std::uniform_real_distribution<double> u(0.0, hi);
  std::uniform_real_distribution<double> s(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), s(rng), 0.0};
}

}  // namespace

TEST_CASE("expm4 examples") {
  CHECK(expm4(Matrix4::Zero(), 3.0) == Matrix4::Identity());

  Matrix4 rot = Matrix4::Zero();
  rot(1, 2) = 1.0;
  rot(2, 1) = -1.0;
  const Matrix4 r = expm4(rot, M_PI / 2);
  CHECK(r(1, 1) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r(1, 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r(2, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(r(0, 0) == doctest::Approx(1.0).epsilon(1e-15));

  const Matrix4 d = Eigen::Vector4d(-1, -1, -1, 0).asDiagonal();
  const Matrix4 e = expm4(d, std::log(2.0));
  CHECK(testing::max_abs((e.diagonal() - Eigen::Vector4d(0.5, 0.5, 0.5, 1.0)).eval()) < 1e-15);
}

TEST_CASE("expm4 against independent oracles") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(-3.0, 2.0);
  double worst_eigen = 0.0;
  double worst_taylor = 0.0;
  for (int i = 0; i < 300; ++i) {
    Matrix4 m;
    for (int k = 0; k < 16; ++k) {
      m(k / 4, k % 4) = u(rng);
    }
    // ||m tau|| from ~1e-3 up to ~100
    const double tau = std::pow(10.0, scale(rng)) / m.cwiseAbs().colwise().sum().maxCoeff();
    const Matrix4 e = expm4(m, tau);
    worst_eigen = std::max(worst_eigen, rel_err(e, testing::eigen_expm(m, tau)));
    worst_taylor = std::max(worst_taylor, rel_err(e, taylor_expm(m, tau)));
  }
  // generator matrices of the model, including strongly growing ones
  for (int i = 0; i < 100; ++i) {
    const Matrix4 m = build_m(draw(rng));
    const double tau = 20.0 * (u(rng) + 1.0);
    worst_eigen = std::max(worst_eigen, rel_err(expm4(m, tau), testing::eigen_expm(m, tau)));
  }
  CHECK(worst_eigen < 1e-12);
  CHECK(worst_taylor < 1e-12);
}

TEST_CASE("expm4 against the high-precision value") {
  const Matrix4 m = build_m({0.3, 0.7, 1.1, 0.4, 0.0});
  const BlochState4 got = BlochState4::from(expm4(m, 2.0) * Eigen::Vector4d(0.1, 0.2, -0.6, 1.0));
  CHECK(testing::max_diff(got, oracle::kHybrid) < 1e-14);
}

TEST_CASE("expm4 semigroup and errors") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    const Matrix4 m = build_m(draw(rng, 1.0));
    const Matrix4 ab = expm4(m, 0.7) * expm4(m, 1.9);
    CHECK(rel_err(ab, expm4(m, 2.6)) < 1e-10);
  }
  CHECK_THROWS_WITH_AS(expm4(Matrix4::Identity() * 800.0, 1.0), "propagator overflow", Error);
  Matrix4 bad = Matrix4::Zero();
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(expm4(bad, 1.0), Error);
}

TEST_CASE("EvolveConfig checks and sample grid") {
  CHECK_THROWS_AS(check(EvolveConfig{0.0, 0.1, 1}), Error);
  CHECK_THROWS_AS(check(EvolveConfig{1.0, 0.0, 1}), Error);
  CHECK_THROWS_AS(check(EvolveConfig{1.0, 2.0, 1}), Error);
  CHECK_THROWS_AS(check(EvolveConfig{1.0, 0.1, 0}), Error);
  CHECK_THROWS_AS(check(EvolveConfig{1e4, 1e-4, 100}), Error);
  auto t = sample_times({20.0, 0.01, 1});
  CHECK(t.size() == 2001);
  CHECK(t.back() == doctest::Approx(20.0));
  t = sample_times({1.0, 0.3, 1});
  CHECK(t.size() == 4);
  CHECK(t.back() == doctest::Approx(0.9));
}

TEST_CASE("evolve_linear examples") {
  EvolveConfig cfg{M_PI, M_PI / 2, 1};
  const Trajectory traj = evolve_linear({}, {0, 0, -1, 1}, cfg);
  REQUIRE(traj.size() == 3);
  CHECK(testing::max_diff(traj.states[1], BlochState4{0, -1, 0, 1}) < 1e-14);
  CHECK(testing::max_diff(traj.states[2], BlochState4{0, 0, 1, 1}) < 1e-14);
  CHECK(traj.warnings.empty());

  const Trajectory lind = evolve_linear({0.3, 0, 0, 0, 0}, {0.1, 0.2, -0.5, 1}, {50.0, 0.1, 1});
  for (const auto& s : lind.states) {
    CHECK(std::abs(s.tr - 1.0) < 1e-12);
  }
  const Trajectory warn = evolve_linear({0.3, 0, 0, 0, 0}, {0, 0, -2, 2}, {1.0, 0.5, 1});
  CHECK(warn.warnings.size() == 1);
  CHECK_THROWS_AS(evolve_linear({0.3, 0, 0, 0, 1.0}, {0, 0, -1, 1}, {1.0, 0.5, 1}), Error);
}

TEST_CASE("evolve_rk4 examples") {
  const DensityMatrix2 ground = reconstruct({0, 0, -1, 1});
  const Trajectory rabi = evolve_rk4({}, ground, {2 * M_PI, 2 * M_PI / 6000, 1});
  CHECK(testing::max_diff(rabi.states.back(), BlochState4{0, 0, -1, 1}) < 1e-8);

  const Trajectory damp = evolve_rk4({0.25, 0, 0, 0, 0}, ground, {20.0, 1e-3, 1});
  double worst = 0.0;
  for (std::size_t k = 0; k < damp.size(); k += 100) {
    const BlochState4 exact = analytic::lindblad_solution(0.25, {0, 0, -1, 1}, damp.taus[k]);
    worst = std::max(worst, testing::max_diff(damp.states[k], exact));
  }
  CHECK(worst < 1e-6);

  const ReducedParams rp{0.2, 0.4, 0.3, 0.0, 0.0};
  ReducedParams shifted = rp;
  shifted.tt = 0.7;
  const DensityMatrix2 rho0 = reconstruct({0.3, -0.1, 0.2, 1});
  const Trajectory a = evolve_rk4(rp, rho0, {20.0, 1e-3, 1});
  const Trajectory b = evolve_rk4(shifted, rho0, {20.0, 1e-3, 1});
  double gauge = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    gauge = std::max(gauge, testing::max_diff(a.normalized[k], b.normalized[k]));
  }
  CHECK(gauge < 1e-9);
}

TEST_CASE("evolve_rk4 errors") {
  DensityMatrix2 bad = reconstruct({0, 0, -1, 1});
  bad(0, 1) += 0.1;
  CHECK_THROWS_AS(evolve_rk4({}, bad, {1.0, 0.1, 1}), Error);
  CHECK_THROWS_AS(evolve_rk4({}, reconstruct({0, 0, 0, 0}), {1.0, 0.1, 1}), Error);
  // explicit RK4 far outside its stability region
  CHECK_THROWS_AS(evolve_rk4({200.0, 0, 0, 0, 0}, reconstruct({0, 0, -1, 1}), {100.0, 0.5, 1}),
                  Error);
}

TEST_CASE("evolve_rk4 runs at finite temperature") {
  // thermal jumps keep the trace
  const Trajectory t = evolve_rk4({0.5, 0, 0, 0, 1.0}, reconstruct({0, 0, -1, 1}), {40.0, 0.01, 4});
  for (const auto& s : t.states) {
    CHECK(std::abs(s.tr - 1.0) < 1e-12);
  }
  CHECK(bloch_norm_sq(t.normalized.back()) < 1.0);
}

TEST_CASE("steady_state examples") {
  auto s = steady_state({0.5, 0, 0, 0, 0});
  CHECK(testing::max_diff(s, NormalizedBloch{0, -2.0 / 3, -2.0 / 3}) < 1e-9);
  s = steady_state({0, 1, 0, 0, 0});
  CHECK(testing::max_diff(s, NormalizedBloch{-1, 0, 0}) < 1e-9);
  s = steady_state({0, 0, 2, 0, 0});
  CHECK(testing::max_diff(s, NormalizedBloch{0, 0.5, std::sqrt(3.0) / 2}) < 1e-9);
  s = steady_state({0, 1, 0, 5.0, 0});
  CHECK(testing::max_diff(s, NormalizedBloch{-1, 0, 0}) < 1e-9);
  CHECK_THROWS_WITH_AS(steady_state({0, 0, 0.5, 0, 0}), "no steady state (oscillatory regime?)",
                       Error);
}

TEST_CASE("FlowSampler matches direct propagation") {
  const ReducedParams rp{0.0, 2.0, 0.3, 0.0, 0.0};
  const Matrix4 m = build_m(rp);
  const BlochState4 b0{0, 0, -1, 1};
  const FlowSampler flow(m, b0, 400.0);
  for (double tau : {0.0, 0.37, 5.5, 17.25, 60.0}) {
    const Eigen::Vector4d v = testing::eigen_expm(m, tau) * b0.vec();
    CHECK(testing::max_diff(flow.at(tau), normalize(BlochState4::from(v))) < 1e-12);
  }
  // far beyond where e^{M tau} b0 overflows
  CHECK(std::isfinite(flow.at(400.0).x));
  CHECK(testing::max_diff(flow.at(400.0), steady_state(rp)) < 1e-9);
  CHECK_THROWS_AS(flow.at(401.0), Error);
  CHECK_THROWS_AS(flow.at(-1.0), Error);
}
