#pragma once

#include "hybridtls/pauli.hpp"

namespace htls {

struct CoherenceValue {
  Complex value;  ///< <sigma_+>
};

/// p_e = (1 + z)/2
double upper_population(const NormalizedBloch& nb);

/// p_g = 1 - p_e
double lower_population(const NormalizedBloch& nb);

/// <sigma_+> = (x + i y)/2 in the interaction picture.
CoherenceValue coherence_interaction(const NormalizedBloch& nb);

/// sigma_+ picks up e^{i omega0 t} on the way to the Schroedinger picture;
/// populations and z are unchanged. `phase` is omega0 t in radians.
CoherenceValue to_schrodinger_coherence(const NormalizedBloch& nb, double phase);

}  // namespace htls
