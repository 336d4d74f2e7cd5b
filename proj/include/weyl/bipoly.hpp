#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>

#include "weyl/errors.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

using Index = std::int64_t;

/// A point of Z^2. Exponent pairs (i, j) of X^i Y^j are the nonnegative ones.
struct LatticePoint {
  Index i = 0;
  Index j = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.i + b.i, a.j + b.j}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.i - b.i, a.j - b.j}; }
  friend LatticePoint operator*(Index n, LatticePoint a) { return {n * a.i, n * a.j}; }
};

/// (a,b) x (c,d) = ad - bc.
constexpr Index cross(LatticePoint a, LatticePoint b) { return a.i * b.j - a.j * b.i; }

/// Canonical term order: by total degree i+j, then by i.
struct CanonicalOrder {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    return std::tuple(a.i + a.j, a.i) < std::tuple(b.i + b.j, b.i);
  }
};

/// Sparse bivariate polynomial with exact rational coefficients. The tag
/// selects the multiplication semantics: WeylTag for normal-ordered
/// elements of A_1, CommTag for the commutative ring K[x,y].
///
/// Invariants: no stored coefficient is zero, every exponent is
/// nonnegative, and the zero polynomial has no terms.
template <class Tag>
class BiPoly {
 public:
  using TermMap = std::map<LatticePoint, Scalar, CanonicalOrder>;

  BiPoly() = default;

  static BiPoly monomial(Index i, Index j, const Scalar& coeff = 1) {
    BiPoly p;
    p.add_term({i, j}, coeff);
    return p;
  }

  static BiPoly constant(const Scalar& coeff) { return monomial(0, 0, coeff); }

  /// Adds coeff * X^i Y^j, dropping the term if it cancels.
  void add_term(LatticePoint exponent, const Scalar& coeff) {
    if (exponent.i < 0 || exponent.j < 0) {
      throw PreconditionError("negative exponent in polynomial term");
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Scalar coeff(LatticePoint exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool contains(LatticePoint exponent) const { return terms_.count(exponent) != 0; }

  Index deg_x() const {
    Index d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.i);
    return d;
  }

  Index deg_y() const {
    Index d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.j);
    return d;
  }

  Index total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.i + terms_.rbegin()->first.j; }

  BiPoly& operator+=(const BiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  BiPoly& operator-=(const BiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  BiPoly& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= Scalar(-1); }
  friend BiPoly operator*(const Scalar& s, BiPoly a) { return a *= s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

struct WeylTag {};
struct CommTag {};

/// Element of the first Weyl algebra in normal form sum a_ij X^i Y^j.
using WeylElement = BiPoly<WeylTag>;
/// Element of L = K[x,y].
using CommPoly = BiPoly<CommTag>;

/// Commutative product in K[x,y].
CommPoly operator*(const CommPoly& a, const CommPoly& b);
CommPoly pow(const CommPoly& base, unsigned k);

}  // namespace weyl
