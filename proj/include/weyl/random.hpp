#pragma once

#include <cstdint>
#include <random>

#include "weyl/bipoly.hpp"
#include "weyl/support_geometry.hpp"
#include "weyl/unipoly.hpp"

namespace weyl {

using Rng = std::mt19937_64;

/// splitmix64 of (seed, stream, index); gives every case its own stream so
/// results do not depend on how cases are spread over threads.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Nonzero rational with numerator in [-5,5] and denominator in [1,3].
Scalar random_scalar(Rng& rng);

/// Random nonzero element with exponents in [0, max_deg]^2.
WeylElement random_element(Rng& rng, Index max_deg, std::size_t max_terms);

/// Random nonzero element homogeneous for d, exponents in [0, max_deg]^2.
WeylElement random_homogeneous(Rng& rng, const Direction& d, Index max_deg);

/// Random direction with rho + sigma > 0 and |rho|, |sigma| <= max_abs.
Direction random_positive_direction(Rng& rng, Index max_abs);

/// Random polynomial with at least min_terms terms and degree <= max_deg,
/// coefficients drawn from {+-2, +-1, +-1/2}.
UniPoly random_unipoly(Rng& rng, std::int64_t max_deg, std::size_t min_terms);

}  // namespace weyl
