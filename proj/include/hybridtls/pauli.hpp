#pragma once

#include <complex>

#include <Eigen/Core>

namespace htls {

using Complex = std::complex<double>;

/// 2x2 density operator in the basis (|e>, |g>): index 0 is the excited
/// state, so rho(0,0) is the upper-level weight. Not necessarily unit trace.
using DensityMatrix2 = Eigen::Matrix2cd;

/// Unnormalized Pauli averages <sigma_i> = tr(sigma_i rho) plus tr(rho),
/// ordered (sigma1, sigma2, sigma3, I).
struct BlochState4 {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  double tr = 1.0;

  Eigen::Vector4d vec() const { return {s1, s2, s3, tr}; }
  static BlochState4 from(const Eigen::Vector4d& v) {
    return {v(0), v(1), v(2), v(3)};
  }
};

/// Observable averages <sigma_i'> = <sigma_i> / tr(rho).
struct NormalizedBloch {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Eigen::Vector3d vec() const { return {x, y, z}; }
  static NormalizedBloch from(const Eigen::Vector3d& v) {
    return {v(0), v(1), v(2)};
  }
};

namespace pauli {

const Eigen::Matrix2cd& identity();
const Eigen::Matrix2cd& sigma1();
const Eigen::Matrix2cd& sigma2();
const Eigen::Matrix2cd& sigma3();
/// sigma_+ = (sigma1 + i sigma2)/2 = |e><g|
const Eigen::Matrix2cd& sigma_plus();
/// sigma_- = (sigma1 - i sigma2)/2 = |g><e|
const Eigen::Matrix2cd& sigma_minus();

}  // namespace pauli

inline constexpr double kHermiticityTolerance = 1e-9;
inline constexpr double kTraceFloor = 1e-300;

/// Largest deviation from Hermiticity, max |rho - rho^dagger|.
double hermiticity_defect(const DensityMatrix2& rho);

/// (rho + rho^dagger)/2.
DensityMatrix2 hermitize(const DensityMatrix2& rho);

/// Pauli decomposition. Throws InvalidInput ("hermiticity violated") when
/// the input is not Hermitian within `tolerance`; never symmetrizes.
BlochState4 decompose(const DensityMatrix2& rho,
                      double tolerance = kHermiticityTolerance);

/// rho = (I tr + sum_i sigma_i s_i) / 2, the exact inverse of decompose.
DensityMatrix2 reconstruct(const BlochState4& b);

/// Divides the Pauli averages by the trace. Throws Numerical
/// ("trace collapse") when tr <= 1e-300.
NormalizedBloch normalize(const BlochState4& b);

double bloch_norm_sq(const NormalizedBloch& nb);

/// 1 - 4 det(rho / tr rho); equals bloch_norm_sq of the normalized state
/// and vanishes only for the maximally mixed state.
double purity_indicator(const DensityMatrix2& rho);

}  // namespace htls
