#pragma once

#include <Eigen/Core>

#include "hybridtls/pauli.hpp"

namespace htls {

/// Dimensionful model parameters of the resonantly driven two-level atom.
struct PhysicalParams {
  double omega = 1.0;      ///< Rabi frequency, rad/time; sets tau = omega t
  double omega0 = 0.0;     ///< transition frequency, rad/time
  double gamma0 = 0.0;     ///< spontaneous emission rate, 1/time
  double n_thermal = 0.0;  ///< Planck occupation at omega0
  double alpha = 0.0;      ///< anti-Hermitian drive amplitude, 1/time
  double gamma_cap = 0.0;  ///< anti-Hermitian sigma3 rate, 1/time
  double gauge_t = 0.0;    ///< imaginary gauge shift, 1/time
};

/// Parameters in units of the Rabi frequency. g0t is gamma0/(4 omega);
/// the other rates are divided by omega.
struct ReducedParams {
  double g0t = 0.0;
  double at = 0.0;
  double gt = 0.0;
  double tt = 0.0;
  double n_thermal = 0.0;
};

using Matrix4 = Eigen::Matrix4d;

/// Throws InvalidInput if the parameters are non-finite or g0t / N < 0.
void check(const ReducedParams& rp);

ReducedParams reduce(const PhysicalParams& p);

/// Generator of d/dtau (s1, s2, s3, tr) at zero temperature, including the
/// -tt shift on the whole diagonal. Refuses n_thermal != 0.
Matrix4 build_m(const ReducedParams& rp);

/// M v for the (sigma1, sigma2, sigma3, tr) state.
BlochState4 apply(const Matrix4& m, const BlochState4& v);

// Individual contributions to d rho / d tau in the interaction picture.
namespace terms {

/// (i/2)[sigma+ + sigma-, rho]
DensityMatrix2 rabi_drive(const DensityMatrix2& rho);
/// -(at/2){sigma+ + sigma-, rho}
DensityMatrix2 anti_hermitian_drive(const DensityMatrix2& rho, double at);
/// rate (sigma- rho sigma+ - {sigma+ sigma-, rho}/2)
DensityMatrix2 emission(const DensityMatrix2& rho, double rate);
/// rate (sigma+ rho sigma- - {sigma- sigma+, rho}/2)
DensityMatrix2 absorption(const DensityMatrix2& rho, double rate);
/// (gt/2){sigma3, rho}
DensityMatrix2 decay_operator(const DensityMatrix2& rho, double gt);
/// -tt rho
DensityMatrix2 gauge(const DensityMatrix2& rho, double tt);

}  // namespace terms

/// Full hybrid right-hand side d rho / d tau, thermal jump terms included.
DensityMatrix2 master_rhs(const DensityMatrix2& rho, const ReducedParams& rp);

/// d(x, y, z)/d tau for the normalized averages:
/// G_eff (x, y, z) + b with G_eff = G + (F + tt) I, F = at x - gt z.
/// The result does not depend on tt. Refuses n_thermal != 0.
Eigen::Vector3d normalized_rhs(const NormalizedBloch& nb, const ReducedParams& rp);

}  // namespace htls
