#include "hybridtls/model.hpp"

#include <cmath>

#include "hybridtls/error.hpp"

namespace htls {

namespace {

void require_zero_temperature(const ReducedParams& rp) {
  if (rp.n_thermal != 0.0) {
    throw Error(ErrorKind::Domain, "analytic matrix valid only at N=0");
  }
}

}  // namespace

void check(const ReducedParams& rp) {
  if (!std::isfinite(rp.g0t) || !std::isfinite(rp.at) || !std::isfinite(rp.gt) ||
      !std::isfinite(rp.tt) || !std::isfinite(rp.n_thermal)) {
    throw Error(ErrorKind::InvalidInput, "parameters must be finite");
  }
  if (rp.g0t < 0.0) {
    throw Error(ErrorKind::InvalidInput, "g0t must be non-negative");
  }
  if (rp.n_thermal < 0.0) {
    throw Error(ErrorKind::InvalidInput, "thermal occupation must be non-negative");
  }
}

ReducedParams reduce(const PhysicalParams& p) {
  if (!(p.omega > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "Rabi frequency must be positive");
  }
  ReducedParams rp;
  rp.g0t = p.gamma0 / (4.0 * p.omega);
  rp.at = p.alpha / p.omega;
  rp.gt = p.gamma_cap / p.omega;
  rp.tt = p.gauge_t / p.omega;
  rp.n_thermal = p.n_thermal;
  check(rp);
  return rp;
}

Matrix4 build_m(const ReducedParams& rp) {
  check(rp);
  require_zero_temperature(rp);
  const double g = rp.g0t;
  Matrix4 m;
  // clang-format off
  m << -2.0 * g,  0.0,      0.0,      -rp.at,
        0.0,     -2.0 * g,  1.0,       0.0,
        0.0,     -1.0,     -4.0 * g,   rp.gt - 4.0 * g,
       -rp.at,    0.0,      rp.gt,     0.0;
  // clang-format on
  m.diagonal().array() -= rp.tt;
  return m;
}

BlochState4 apply(const Matrix4& m, const BlochState4& v) {
  return BlochState4::from(m * v.vec());
}

namespace terms {

using pauli::sigma1;
using pauli::sigma3;
using pauli::sigma_minus;
using pauli::sigma_plus;

DensityMatrix2 rabi_drive(const DensityMatrix2& rho) {
  const Complex half_i{0.0, 0.5};
  return half_i * (sigma1() * rho - rho * sigma1());
}

DensityMatrix2 anti_hermitian_drive(const DensityMatrix2& rho, double at) {
  return -0.5 * at * (sigma1() * rho + rho * sigma1());
}

DensityMatrix2 emission(const DensityMatrix2& rho, double rate) {
  const Eigen::Matrix2cd pm = sigma_plus() * sigma_minus();
  return rate * (sigma_minus() * rho * sigma_plus() - 0.5 * (pm * rho + rho * pm));
}

DensityMatrix2 absorption(const DensityMatrix2& rho, double rate) {
  const Eigen::Matrix2cd mp = sigma_minus() * sigma_plus();
  return rate * (sigma_plus() * rho * sigma_minus() - 0.5 * (mp * rho + rho * mp));
}

DensityMatrix2 decay_operator(const DensityMatrix2& rho, double gt) {
  return 0.5 * gt * (sigma3() * rho + rho * sigma3());
}

DensityMatrix2 gauge(const DensityMatrix2& rho, double tt) { return -tt * rho; }

}  // namespace terms

DensityMatrix2 master_rhs(const DensityMatrix2& rho, const ReducedParams& rp) {
  // gamma0 / omega = 4 g0t in rescaled time
  const double gamma = 4.0 * rp.g0t;
  DensityMatrix2 d = terms::rabi_drive(rho);
  d += terms::anti_hermitian_drive(rho, rp.at);
  d += terms::emission(rho, gamma * (rp.n_thermal + 1.0));
  if (rp.n_thermal != 0.0) {
    d += terms::absorption(rho, gamma * rp.n_thermal);
  }
  d += terms::decay_operator(rho, rp.gt);
  d += terms::gauge(rho, rp.tt);
  return d;
}

Eigen::Vector3d normalized_rhs(const NormalizedBloch& nb, const ReducedParams& rp) {
  check(rp);
  require_zero_temperature(rp);
  const double g = rp.g0t;
  // G_eff = G + (F + tt) I; the tt on G's diagonal cancels, so it is
  // assembled here without it.
  const double f = rp.at * nb.x - rp.gt * nb.z;
  Eigen::Matrix3d g_eff;
  // clang-format off
  g_eff << f - 2.0 * g, 0.0,          0.0,
           0.0,         f - 2.0 * g,  1.0,
           0.0,        -1.0,          f - 4.0 * g;
  // clang-format on
  const Eigen::Vector3d b{-rp.at, 0.0, rp.gt - 4.0 * g};
  return g_eff * nb.vec() + b;
}

}  // namespace htls
