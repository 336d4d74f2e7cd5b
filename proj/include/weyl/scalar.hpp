#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace weyl {

/// Exact rational scalar. mpq_class keeps numerator and denominator
/// canonical after every arithmetic operation; values built from raw
/// parts go through make_scalar, which canonicalizes.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Builds num/den in lowest terms with a positive denominator.
Scalar make_scalar(const Integer& num, const Integer& den = 1);
Scalar make_scalar(std::int64_t num, std::int64_t den = 1);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Scalar& value);

}  // namespace weyl
