#include "hybridtls/pauli.hpp"

#include <cmath>

#include <Eigen/LU>

#include "hybridtls/error.hpp"

namespace htls {

namespace pauli {
namespace {

Eigen::Matrix2cd make(Complex a, Complex b, Complex c, Complex d) {
  Eigen::Matrix2cd m;
  m << a, b, c, d;
  return m;
}

constexpr Complex kI{0.0, 1.0};

}  // namespace

const Eigen::Matrix2cd& identity() {
  static const Eigen::Matrix2cd m = make(1.0, 0.0, 0.0, 1.0);
  return m;
}
const Eigen::Matrix2cd& sigma1() {
  static const Eigen::Matrix2cd m = make(0.0, 1.0, 1.0, 0.0);
  return m;
}
const Eigen::Matrix2cd& sigma2() {
  static const Eigen::Matrix2cd m = make(0.0, -kI, kI, 0.0);
  return m;
}
const Eigen::Matrix2cd& sigma3() {
  static const Eigen::Matrix2cd m = make(1.0, 0.0, 0.0, -1.0);
  return m;
}
const Eigen::Matrix2cd& sigma_plus() {
  static const Eigen::Matrix2cd m = make(0.0, 1.0, 0.0, 0.0);
  return m;
}
const Eigen::Matrix2cd& sigma_minus() {
  static const Eigen::Matrix2cd m = make(0.0, 0.0, 1.0, 0.0);
  return m;
}

}  // namespace pauli

double hermiticity_defect(const DensityMatrix2& rho) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

DensityMatrix2 hermitize(const DensityMatrix2& rho) {
  return 0.5 * (rho + rho.adjoint());
}

BlochState4 decompose(const DensityMatrix2& rho, double tolerance) {
  if (!rho.allFinite()) {
    throw Error(ErrorKind::InvalidInput, "hermiticity violated: non-finite entry");
  }
  if (hermiticity_defect(rho) > tolerance) {
    throw Error(ErrorKind::InvalidInput, "hermiticity violated");
  }
  // tr(sigma1 rho) = rho12 + rho21, tr(sigma2 rho) = i(rho12 - rho21)
  const Complex r12 = rho(0, 1);
  const Complex r21 = rho(1, 0);
  BlochState4 b;
  b.s1 = (r12 + r21).real();
  b.s2 = (Complex{0.0, 1.0} * (r12 - r21)).real();
  b.s3 = (rho(0, 0) - rho(1, 1)).real();
  b.tr = (rho(0, 0) + rho(1, 1)).real();
  return b;
}

DensityMatrix2 reconstruct(const BlochState4& b) {
  DensityMatrix2 rho;
  rho << 0.5 * (b.tr + b.s3), Complex{0.5 * b.s1, -0.5 * b.s2},
      Complex{0.5 * b.s1, 0.5 * b.s2}, 0.5 * (b.tr - b.s3);
  return rho;
}

NormalizedBloch normalize(const BlochState4& b) {
  if (!(b.tr > kTraceFloor)) {
    throw Error(ErrorKind::Numerical, "trace collapse");
  }
  return {b.s1 / b.tr, b.s2 / b.tr, b.s3 / b.tr};
}

double bloch_norm_sq(const NormalizedBloch& nb) {
  return nb.x * nb.x + nb.y * nb.y + nb.z * nb.z;
}

double purity_indicator(const DensityMatrix2& rho) {
  const Complex tr = rho.trace();
  if (!(std::abs(tr) > kTraceFloor)) {
    throw Error(ErrorKind::Numerical, "trace collapse");
  }
  const DensityMatrix2 unit = rho / tr;
  return 1.0 - 4.0 * unit.determinant().real();
}

}  // namespace htls
