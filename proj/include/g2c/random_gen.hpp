#pragma once

#include <random>

#include "g2c/contractions.hpp"
#include "g2c/octonion.hpp"

namespace g2c {

using Rng = std::mt19937_64;

/// Small random rational p/q with p in [-9,9], q in [1,9].
Rational random_rational(Rng& rng, bool nonzero = false);

/// Random Gaussian rational; with_imag mixes in an imaginary part about
/// half the time.
Scalar random_scalar(Rng& rng, bool nonzero = false, bool with_imag = true);

Octonion random_octonion(Rng& rng);

/// Arbitrary values (nonzero on the given support), no membership in A
/// implied.
AdmissibleMap random_edge_values(Rng& rng, EdgeSet support, bool with_imag = true);

/// A random member of A with the given nice support: eta^T twisted by a
/// random normalization (which preserves both membership and support).
AdmissibleMap random_admissible(Rng& rng, EdgeSet nice_support, bool with_imag = true);

NormalizationMap random_normalization(Rng& rng, bool with_imag = true);

const Collineation& random_collineation(Rng& rng);

}  // namespace g2c
