#include <cmath>

#include <doctest.h>

#include "hybridtls/analytic.hpp"
#include "hybridtls/observables.hpp"
#include "hybridtls/propagator.hpp"

using namespace htls;

TEST_CASE("populations") {
  CHECK(upper_population({0, 0, 1}) == 1.0);
  CHECK(upper_population({0, 0, -1}) == 0.0);
  CHECK(upper_population({0, -2.0 / 3, -2.0 / 3}) == doctest::Approx(1.0 / 6));
  for (double z : {-1.0, -0.3, 0.0, 0.77}) {
    const NormalizedBloch nb{0.1, 0.2, z};
    CHECK(upper_population(nb) + lower_population(nb) == 1.0);
  }
}

TEST_CASE("interaction-picture coherence") {
  CHECK(coherence_interaction({1, 0, 0}).value == Complex(0.5, 0));
  CHECK(coherence_interaction({0, 1, 0}).value == Complex(0, 0.5));
  CHECK(coherence_interaction({0, 0, 1}).value == Complex(0, 0));
  // <sigma+> = tr(rho sigma+) for the density matrix itself
  const DensityMatrix2 rho = reconstruct({0.3, -0.4, 0.1, 1.0});
  const Complex direct = (rho * pauli::sigma_plus()).trace();
  CHECK(std::abs(direct - coherence_interaction({0.3, -0.4, 0.1}).value) < 1e-15);
}

TEST_CASE("Schroedinger-picture coherence") {
  const NormalizedBloch nb{0.6, -0.2, 0.1};
  CHECK(to_schrodinger_coherence(nb, 0.0).value == coherence_interaction(nb).value);
  CHECK(std::abs(to_schrodinger_coherence({1, 0, 0}, M_PI).value - Complex(-0.5, 0)) < 1e-15);
  for (double phase : {0.3, 1.7, -4.0, 100.0}) {
    CHECK(std::abs(to_schrodinger_coherence(nb, phase).value) ==
          doctest::Approx(std::abs(coherence_interaction(nb).value)).epsilon(1e-15));
  }
}

TEST_CASE("Im coherence tracks y along a Lindblad run") {
  const Trajectory t = evolve_linear({0.25, 0, 0, 0, 0}, {0, 0, -1, 1}, {20.0, 0.05, 1});
  for (const NormalizedBloch& nb : t.normalized) {
    CHECK(coherence_interaction(nb).value.imag() == nb.y / 2);
    CHECK(std::abs(coherence_interaction(nb).value) <= 0.5 + 1e-9);
  }
}
