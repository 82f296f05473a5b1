#include "hybridtls/observables.hpp"

#include <cmath>

namespace htls {

double upper_population(const NormalizedBloch& nb) { return 0.5 * (1.0 + nb.z); }

double lower_population(const NormalizedBloch& nb) { return 1.0 - upper_population(nb); }

CoherenceValue coherence_interaction(const NormalizedBloch& nb) {
  return {Complex(0.5 * nb.x, 0.5 * nb.y)};
}

CoherenceValue to_schrodinger_coherence(const NormalizedBloch& nb, double phase) {
  return {std::polar(1.0, phase) * coherence_interaction(nb).value};
}

}  // namespace htls
