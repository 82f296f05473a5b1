// Scaling and squaring with degree-m Pade approximants, m in {3,5,7,9,13}.
// Thresholds and coefficients follow N. J. Higham, "The scaling and squaring
// method for the matrix exponential revisited", SIAM J. Matrix Anal. Appl.
// 26 (2005) 1179-1193.

#include <array>
#include <cmath>

#include <Eigen/LU>

#include "hybridtls/error.hpp"
#include "hybridtls/propagator.hpp"

namespace htls {

namespace {

struct PadeTerms {
  Matrix4 u;  // odd part
  Matrix4 v;  // even part
};

PadeTerms pade3(const Matrix4& a) {
  constexpr std::array<double, 4> b = {120.0, 60.0, 12.0, 1.0};
  const Matrix4 id = Matrix4::Identity();
  const Matrix4 a2 = a * a;
  return {a * (b[3] * a2 + b[1] * id), b[2] * a2 + b[0] * id};
}

PadeTerms pade5(const Matrix4& a) {
  constexpr std::array<double, 6> b = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
  const Matrix4 id = Matrix4::Identity();
  const Matrix4 a2 = a * a;
  const Matrix4 a4 = a2 * a2;
  return {a * (b[5] * a4 + b[3] * a2 + b[1] * id),
          b[4] * a4 + b[2] * a2 + b[0] * id};
}

PadeTerms pade7(const Matrix4& a) {
  constexpr std::array<double, 8> b = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                       25200.0,    1512.0,    56.0,      1.0};
  const Matrix4 id = Matrix4::Identity();
  const Matrix4 a2 = a * a;
  const Matrix4 a4 = a2 * a2;
  const Matrix4 a6 = a4 * a2;
  return {a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id),
          b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id};
}

PadeTerms pade9(const Matrix4& a) {
  constexpr std::array<double, 10> b = {17643225600.0, 8821612800.0, 2075673600.0,
                                        302702400.0,   30270240.0,   2162160.0,
                                        110880.0,      3960.0,       90.0,
                                        1.0};
  const Matrix4 id = Matrix4::Identity();
  const Matrix4 a2 = a * a;
  const Matrix4 a4 = a2 * a2;
  const Matrix4 a6 = a4 * a2;
  const Matrix4 a8 = a6 * a2;
  return {a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id),
          b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id};
}

PadeTerms pade13(const Matrix4& a) {
  constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const Matrix4 id = Matrix4::Identity();
  const Matrix4 a2 = a * a;
  const Matrix4 a4 = a2 * a2;
  const Matrix4 a6 = a4 * a2;
  const Matrix4 inner_u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  const Matrix4 inner_v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  return {a * (inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id),
          inner_v + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id};
}

Matrix4 solve_pade(const PadeTerms& t) {
  return (t.v - t.u).partialPivLu().solve(t.v + t.u);
}

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

constexpr double kOverflowBound = 1e300;

}  // namespace

Matrix4 expm4(const Matrix4& m, double tau) {
  if (!m.allFinite() || !std::isfinite(tau)) {
    throw Error(ErrorKind::InvalidInput, "expm4: non-finite input");
  }
  const Matrix4 a = m * tau;
  // induced 1-norm: max column sum
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();

  Matrix4 result;
  if (norm <= kTheta3) {
    result = solve_pade(pade3(a));
  } else if (norm <= kTheta5) {
    result = solve_pade(pade5(a));
  } else if (norm <= kTheta7) {
    result = solve_pade(pade7(a));
  } else if (norm <= kTheta9) {
    result = solve_pade(pade9(a));
  } else {
    const int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    result = solve_pade(pade13(a * std::ldexp(1.0, -squarings)));
    for (int i = 0; i < squarings; ++i) {
      result = result * result;
    }
  }

  if (!result.allFinite() || result.cwiseAbs().maxCoeff() > kOverflowBound) {
    throw Error(ErrorKind::Numerical, "propagator overflow");
  }
  return result;
}

}  // namespace htls
