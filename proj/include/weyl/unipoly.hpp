#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

/// Sparse univariate polynomial over the rationals. No zero coefficient is
/// stored; the zero polynomial is empty.
class UniPoly {
 public:
  using TermMap = std::map<std::int64_t, Scalar>;

  UniPoly() = default;

  static UniPoly monomial(std::int64_t exp, const Scalar& coeff = 1);
  static UniPoly constant(const Scalar& coeff) { return monomial(0, coeff); }
  /// Dense coefficients c[0] + c[1] x + ...
  static UniPoly from_dense(std::span<const Scalar> coeffs);

  void add_term(std::int64_t exp, const Scalar& coeff);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Throws PreconditionError on zero.
  std::int64_t degree() const;
  /// Smallest exponent in the support. Throws PreconditionError on zero.
  std::int64_t lowest() const;
  Scalar coeff(std::int64_t exp) const;
  Scalar leading_coeff() const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Scalar& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

UniPoly pow(const UniPoly& f, unsigned k);
UniPoly derivative(const UniPoly& f);
/// Terms of exponent <= prec.
UniPoly truncate(const UniPoly& f, std::int64_t prec);
/// f(lambda x).
UniPoly scale_variable(const UniPoly& f, const Scalar& lambda);
/// f(x^k).
UniPoly substitute_power(const UniPoly& f, std::int64_t k);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};
/// Throws PreconditionError when dividing by zero.
DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// t(f) = #Supp(f).
std::int64_t t_count(const UniPoly& f);

/// t(f^k), computed on the compressed core with denominators cleared:
/// machine integers while they do not overflow, GMP integers after.
std::int64_t power_tcount(const UniPoly& f, std::int64_t k);

/// x^n f(1/x) with n = deg f.
UniPoly reverse(const UniPoly& f);

/// f = x^shift * core(x^stride) with core(0) != 0 and the exponents of core
/// having gcd 1.
struct Compressed {
  std::int64_t shift;
  std::int64_t stride;
  UniPoly core;
};
Compressed strip_and_compress(const UniPoly& f);

/// Whether f is equivalent to 1 + x - x^2/2 under the relation generated
/// by f ~ lambda f, f(x) ~ f(lambda x), f(x) ~ f(x^k) and f ~ x^n f(1/x),
/// with x-power prefactors stripped first. Decided by: the compressed core
/// is a0 + a1 x + a2 x^2 with a1^2 = -2 a0 a2.
bool equiv_to_special(const UniPoly& f);

/// Truncated series u with u(0) = 1 and u^k = f mod x^(prec+1), from the
/// binomial series sum_i C(1/k, i) (f - 1)^i. Requires f(0) == 1, k >= 1.
UniPoly kth_root_series(const UniPoly& f, std::int64_t k, std::int64_t prec);

/// C(a, i) for rational a, via the falling factorial.
Scalar binomial(const Scalar& a, std::int64_t i);

struct KthRoot {
  Scalar mu;
  UniPoly root;  // lowest coefficient is 1
};
/// f = mu * root^k exactly, with the x-power of f divisible by k.
std::optional<KthRoot> poly_kth_root(const UniPoly& f, std::int64_t k);

/// Number of distinct roots over the algebraic closure:
/// deg f - deg gcd(f, f').
std::int64_t distinct_factor_count(const UniPoly& f);

struct PowerSupport {
  std::int64_t t;
  bool boundary_case;  // t(f^k) == 4
};
/// t(f^k) for t(f) >= 3. When t(f^k) == 4 it asserts k == 2 and
/// equiv_to_special(f), throwing InvariantError otherwise.
PowerSupport power_support_check(const UniPoly& f, std::int64_t k);

/// Per-polynomial row of a power-support scan; computed without asserting.
struct PowerScanRow {
  std::int64_t t_power = 0;
  bool special = false;  // only evaluated when t_power == 4
};

/// t(f^k) over a batch. The parallel kernel splits the batch across OpenMP
/// threads; the serial kernel is the reference.
std::vector<PowerScanRow> power_support_scan(std::span<const UniPoly> fs, std::int64_t k);
std::vector<PowerScanRow> power_support_scan_serial(std::span<const UniPoly> fs, std::int64_t k);

}  // namespace weyl
