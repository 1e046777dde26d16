// Seeded random instances for property tests and the verification suite.

#pragma once

#include <random>

#include "gqm/hilbert.hpp"
#include "gqm/projective.hpp"

namespace gqm {

/// Complex Gaussian state, rejection-sampled away from the zero vector.
StateVector random_state(int dim, std::mt19937_64& rng, double hbar = 1.0);

/// Hermitian matrix (A + A^dagger)/2 with Gaussian A, rescaled so the
/// spectral radius is `scale`.
HermitianOperator random_hermitian(int dim, std::mt19937_64& rng,
                                   double scale = 1.0);

/// Antisymmetric matrix (A - A^T)/2 with Gaussian A, spectral norm `scale`.
RMatrix random_antisymmetric(int dim, std::mt19937_64& rng, double scale = 1.0);

/// Chart point with coordinates uniform in the disk |z_j| <= radius.
ChartPoint random_chart_point(int hilbert_dim, std::mt19937_64& rng,
                              double hbar = 1.0, double radius = 1.0);

/// Gaussian tangent components of the given chart dimension, unit norm.
RVector random_tangent(int chart_dim, std::mt19937_64& rng);

}  // namespace gqm
