#pragma once

#include <cstddef>

#include "weyl/bipoly.hpp"
#include "weyl/matrix.hpp"

namespace weyl {

// Normal-form product in A_1. Uses
//   X^a Y^b * X^c Y^d = sum_k k! C(b,k) C(c,k) X^(a+c-k) Y^(b+d-k).
// normal_mul picks the OpenMP kernel for large operands; the serial kernel
// is the reference both are tested against.
WeylElement normal_mul(const WeylElement& p, const WeylElement& q);
WeylElement normal_mul_serial(const WeylElement& p, const WeylElement& q);
WeylElement normal_mul_parallel(const WeylElement& p, const WeylElement& q);

inline WeylElement operator*(const WeylElement& p, const WeylElement& q) { return normal_mul(p, q); }

/// [P,Q] = PQ - QP.
WeylElement bracket(const WeylElement& p, const WeylElement& q);

WeylElement pow(const WeylElement& p, unsigned k);

/// The generators.
inline WeylElement weyl_x() { return WeylElement::monomial(1, 0); }
inline WeylElement weyl_y() { return WeylElement::monomial(0, 1); }
inline WeylElement weyl_one() { return WeylElement::constant(1); }

/// Coefficient-preserving exchange X^i Y^j <-> x^i y^j.
CommPoly psi(const WeylElement& p);
WeylElement psi_inv(const CommPoly& p);

/// Image under the automorphism X -> Y, Y -> -X.
WeylElement apply_tau(const WeylElement& p);

/// Image under the automorphism X -> X, Y -> Y + mu X^sigma (sigma >= 1).
WeylElement apply_phi(const WeylElement& p, const Scalar& mu, Index sigma);

/// Operator of P on K[t]_{<=n} (basis 1, t, ..., t^n): X acts as
/// multiplication by t with t^(n+1) dropped, Y as d/dt. Column m is the
/// image of t^m.
ScalarMatrix matrix_rep(const WeylElement& p, std::size_t n);

}  // namespace weyl
