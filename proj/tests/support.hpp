#pragma once

#include <cmath>
#include <random>

#include <Eigen/Core>
#include <unsupported/Eigen/MatrixFunctions>

#include "hybridtls/model.hpp"
#include "hybridtls/pauli.hpp"

namespace testing {

// Independent propagator: Eigen's own matrix exponential.
inline htls::Matrix4 eigen_expm(const htls::Matrix4& m, double tau) {
  const htls::Matrix4 a = m * tau;
  return a.exp();
}

inline Eigen::Vector4d eigen_flow(const htls::ReducedParams& rp, const htls::BlochState4& b0,
                                  double tau) {
  return eigen_expm(htls::build_m(rp), tau) * b0.vec();
}

inline double max_abs(const Eigen::VectorXd& v) { return v.cwiseAbs().maxCoeff(); }

inline double max_diff(const htls::NormalizedBloch& a, const htls::NormalizedBloch& b) {
  return (a.vec() - b.vec()).cwiseAbs().maxCoeff();
}

inline double max_diff(const htls::BlochState4& a, const htls::BlochState4& b) {
  return (a.vec() - b.vec()).cwiseAbs().maxCoeff();
}

/// Unit-trace state, uniform in the Bloch ball (or on the sphere if pure).
inline htls::BlochState4 random_state(std::mt19937_64& rng, bool pure = false) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::Vector3d v(n(rng), n(rng), n(rng));
  v.normalize();
  if (!pure) {
    v *= std::cbrt(u(rng));
  }
  return {v(0), v(1), v(2), 1.0};
}

}  // namespace testing
