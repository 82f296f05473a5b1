#pragma once

#include <array>
#include <string>
#include <vector>

#include "hybridtls/model.hpp"
#include "hybridtls/pauli.hpp"

// Closed-form solutions of d/dtau (s1, s2, s3, tr) = M (s1, s2, s3, tr) in
// the three solvable regimes: pure Lindblad damping (at = gt = 0), pure
// anti-Hermitian damping (g0t = 0), and the strong-driving expansion where
// every rate is small against the Rabi frequency. All functions assume
// tt = 0; a gauge shift only multiplies the 4-vector by e^{-tt tau}.
//
// Each branch has removable singularities that the closed forms do not
// regularize (kappa = 0, lambda4 = 0, at = 0). Those points raise a Domain
// error pointing at the expm4 path or the oscillatory branch.

namespace htls::analytic {

/// Four eigenvalues of M; always closed under complex conjugation.
using EigenQuad = std::array<Complex, 4>;

// ---------------------------------------------------------------------------
// Lindblad branch

struct LindbladAux {
  Complex kappa;  ///< sqrt(1 - g0t^2); imaginary above critical damping
  double nu_sq;   ///< 1 + 1/(2 g0t^2); infinite at g0t = 0
};

LindbladAux lindblad_aux(double g0t);

/// {-2 g0t, -3 g0t - i kappa, -3 g0t + i kappa, 0}
EigenQuad lindblad_eigenvalues(double g0t);

/// Solution matrix S_L(tau). Throws Domain at |kappa| < 1e-12.
Matrix4 lindblad_solution_matrix(double g0t, double tau);

BlochState4 lindblad_solution(double g0t, const BlochState4& b0, double tau);

/// -(4 g0t / (8 g0t^2 + 1)) (0, 1, 2 g0t). Throws Domain at g0t = 0.
NormalizedBloch lindblad_steady(double g0t);

// ---------------------------------------------------------------------------
// Anti-Hermitian branch

struct AHAux {
  double r_plus = 0.0;   ///< at^2 + (gt^2 - 1)
  double r_minus = 0.0;  ///< at^2 - (gt^2 - 1)
  double r1 = 0.0;       ///< sqrt(r_plus^2 + 4 at^2)
  double k_plus = 0.0;   ///< r1 + r_minus
  double k_minus = 0.0;  ///< r1 - r_minus
  EigenQuad lambdas{};   ///< (-l2, l2, -l4, l4); l2 imaginary, l4 >= 0
  Complex lambda_bar2;   ///< l2 + 1/l2 (NaN when l2 = 0)
  Complex lambda_bar4;   ///< l4 + 1/l4 (NaN when l4 = 0)

  Complex lambda2() const { return lambdas[1]; }
  double lambda4() const { return lambdas[3].real(); }
};

AHAux ah_eigenvalues(double at, double gt);

/// S_A(tau) including the overall 1/R1. Throws Domain when |lambda4| <
/// 1e-10 (oscillatory) or |at| < 1e-12 (entries singular).
Matrix4 ah_solution_matrix(double at, double gt, double tau);

BlochState4 ah_solution(double at, double gt, const BlochState4& b0, double tau);

/// normalize(ah_solution(...)); Numerical "trace collapse" when T_A <= 1e-300.
NormalizedBloch ah_normalized(double at, double gt, const BlochState4& b0, double tau);

/// (1/(l4 lbar4)) (-at lbar4, gt, l4 gt). Throws Domain if lambda4 = 0.
NormalizedBloch ah_steady(double at, double gt);

/// sqrt(1 - gt^2); Domain error unless |gt| < 1.
double oscillation_frequency(double gt);

/// 2 pi / sqrt(1 - gt^2)
double oscillation_period(double gt);

/// Undamped branch at = g0t = 0, |gt| < 1. Periodic with oscillation_period.
NormalizedBloch ah_oscillatory(double gt, const BlochState4& b0, double tau);

/// Trace of the unnormalized state on the undamped branch, so that
/// ah_oscillatory * trace reproduces e^{M tau} b0.
double ah_oscillatory_trace(double gt, const BlochState4& b0, double tau);

// ---------------------------------------------------------------------------
// Strong-driving (Lindblad-dominated) expansion, leading order in
// g0t, at, gt, abar = at/g0t and gbar = gt/g0t.

struct StrongDriving {
  double g0t = 0.0;
  double alpha_bar = 0.0;
  double gamma_bar = 0.0;

  double at() const { return g0t * alpha_bar; }
  double gt() const { return g0t * gamma_bar; }
  ReducedParams reduced() const { return {g0t, at(), gt(), 0.0, 0.0}; }
};

/// Requires g0t > 0 (InvalidInput otherwise).
StrongDriving strong_driving_from(const ReducedParams& rp);

struct SDAux {
  double chi1 = 0.0;  ///< 1 + (2 gbar - 1/2) g0t^2
  double chi2 = 0.0;  ///< abar^2 / 4
  double alpha_bar = 0.0;
  double gamma_bar = 0.0;
};

SDAux sd_aux(const StrongDriving& sd);

/// Parameters above 0.3 for which the expansion is not trustworthy.
std::vector<std::string> sd_regime_warnings(const StrongDriving& sd);

EigenQuad sd_eigenvalues(const StrongDriving& sd);

/// S0 + S_alpha + S_Gamma at time tau.
Matrix4 sd_solution_matrix(const StrongDriving& sd, double tau);

struct SDResult {
  BlochState4 state;
  NormalizedBloch normalized;
};

/// Throws Numerical when the normalization T_LD is not positive.
SDResult sd_solution(const StrongDriving& sd, const BlochState4& b0, double tau);

/// (-abar/2 - 2 at gt, gt - 4 g0t, 2 g0t (gt - 4 g0t))
NormalizedBloch sd_steady(const StrongDriving& sd);

}  // namespace htls::analytic
