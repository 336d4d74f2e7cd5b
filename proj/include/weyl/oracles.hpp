#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "weyl/bipoly.hpp"
#include "weyl/support_geometry.hpp"
#include "weyl/unipoly.hpp"

namespace weyl {

// Brute-force references. They share nothing with the kernels they check
// beyond the term container.

using MulFn = std::function<WeylElement(const WeylElement&, const WeylElement&)>;

/// Product by appending letters one at a time and rewriting YX -> XY + 1.
WeylElement rewrite_mul(const WeylElement& p, const WeylElement& q);

/// Compares M(P) M(Q) with M(product) on the columns t^m, m <= N - degX P -
/// degX Q, where no truncation has happened yet.
bool representation_agrees(const WeylElement& p, const WeylElement& q, const WeylElement& product);

/// Every primitive direction with |rho|, |sigma| <= max(degX, degY) whose
/// leading term has two or more terms, sorted like dir_set.
std::vector<Direction> brute_force_dirs(const WeylElement& p);

/// t(f^k) by repeated dense multiplication over a plain coefficient array.
std::int64_t dense_power_tcount(const UniPoly& f, std::int64_t k);

/// x^a y^b read off a CommPoly monomial-by-monomial product, used to form
/// k l(R)^(k-1) l([R,Q]) without going through the Weyl product.
CommPoly comm_product(const CommPoly& a, const CommPoly& b);

}  // namespace weyl
