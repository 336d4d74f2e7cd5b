#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "weyl/bipoly.hpp"
#include "weyl/unipoly.hpp"

namespace weyl {

/// A direction (rho, sigma): a coprime integer pair.
class Direction {
 public:
  /// Throws PreconditionError unless gcd(rho, sigma) == 1.
  Direction(Index rho, Index sigma);

  Index rho() const noexcept { return rho_; }
  Index sigma() const noexcept { return sigma_; }

  /// rho + sigma > 0.
  bool is_positive() const noexcept { return rho_ + sigma_ > 0; }

  /// rho * i + sigma * j.
  Index weight(LatticePoint p) const noexcept { return rho_ * p.i + sigma_ * p.j; }

  /// (-sigma, rho): the direction in which a counterclockwise walk runs
  /// along an edge whose outward normal is this direction.
  LatticePoint edge_step() const noexcept { return {-sigma_, rho_}; }

  LatticePoint as_point() const noexcept { return {rho_, sigma_}; }

  Direction operator-() const { return Direction(-rho_, -sigma_); }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Index rho_;
  Index sigma_;
};

/// The order of an interval of directions: a < b iff a x b > 0. Refuses
/// (PreconditionError) to compare a direction with its negative, since no
/// interval contains both.
std::strong_ordering compare_directions(const Direction& a, const Direction& b);

/// Order on the closed interval rho + sigma >= 0, where (1,-1) is the least
/// and (-1,1) the greatest element. Both arguments must lie in it.
bool less_in_closed_upper(const Direction& a, const Direction& b);

/// Counterclockwise angular position measured from (1,-1), as a strict weak
/// order over the whole circle. Used to sort Dir(P) deterministically.
bool ccw_before(const Direction& a, const Direction& b);

/// Result of a valuation: an integer, or the -infinity of the zero element.
/// No arithmetic is defined on it; only comparison (and so max).
class Valuation {
 public:
  static Valuation neg_infinity() { return Valuation(); }
  explicit Valuation(Index value) : value_(value) {}

  bool is_neg_infinity() const noexcept { return !value_.has_value(); }

  /// Throws InvariantError on -infinity.
  Index value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  Valuation() = default;
  std::optional<Index> value_;
};

Valuation valuation(const WeylElement& p, const Direction& d);
Valuation valuation(const CommPoly& p, const Direction& d);

/// Sum of the terms attaining the valuation, as an element of K[x,y].
/// Throws PreconditionError on zero.
CommPoly leading(const WeylElement& p, const Direction& d);
CommPoly leading(const CommPoly& p, const Direction& d);

/// Number of distinct levels i - j over the support (zero for P = 0).
Index mass(const WeylElement& p);
Index mass(const CommPoly& p);

/// Homogeneous components by level i - j, highest level first.
std::vector<std::pair<Index, WeylElement>> graded_components(const WeylElement& p);

struct Endpoints {
  LatticePoint st;
  LatticePoint en;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// st and en: first and last points of the leading face met when running
/// counterclockwise along the Newton polygon. For rho + sigma > 0 these are
/// the support points of l_{1,-1} and l_{-1,1} of the leading term; other
/// directions use st_en_walk.
Endpoints st_en(const WeylElement& p, const Direction& d);

/// The same endpoints found by walking the hull vertices.
Endpoints st_en_walk(const WeylElement& p, const Direction& d);

/// Extreme points of the convex hull of the support, counterclockwise,
/// no three consecutive vertices collinear. One vertex for a monomial,
/// two for a segment.
struct NewtonPolygon {
  std::vector<LatticePoint> vertices;

  /// (rho, sigma) outward primitive normal of the edge from vertex k to
  /// vertex k+1 (cyclically). Undefined for a single point.
  Direction edge_normal(std::size_t k) const;
  std::size_t edge_count() const noexcept { return vertices.size() < 2 ? 0 : vertices.size(); }
};

NewtonPolygon newton_polygon(const WeylElement& p);
NewtonPolygon newton_polygon(const CommPoly& p);

/// Dir(P): outward primitive normals of the polygon edges, sorted
/// counterclockwise starting at (1,-1). Empty for monomials.
std::vector<Direction> dir_set(const WeylElement& p);

struct Neighbours {
  Direction succ;
  Direction pred;
};

/// Succ_P(d) and Pred_P(d): the first element of Dir(P) met strictly after
/// d running counterclockwise, and strictly before it running clockwise.
/// Throws PreconditionError for monomials and zero.
Neighbours succ_pred(const WeylElement& p, const Direction& d);

/// l_{rho,sigma}(P) = x^i y^j f(x^{-sigma/rho} y) with (i,j) = st.
struct LeadingPolynomial {
  LatticePoint st;
  UniPoly f;
};

/// Requires rho > 0 and rho + sigma > 0.
LeadingPolynomial extract_fP(const WeylElement& p, const Direction& d);
LeadingPolynomial extract_fP(const CommPoly& p, const Direction& d);

/// Rebuilds l_{rho,sigma} from (st, f).
CommPoly leading_from_fP(const LeadingPolynomial& lp, const Direction& d);

/// (a,b) = (max i, max j) when it lies in the support and a, b >= 1.
std::optional<LatticePoint> is_subrectangular(const WeylElement& p);

/// [P,Q]_{rho,sigma}: the leading term of [P,Q] when its valuation reaches
/// v(P) + v(Q) - (rho + sigma), zero otherwise. Throws InvariantError if
/// the valuation exceeds that bound.
CommPoly bracket_rs(const WeylElement& p, const WeylElement& q, const Direction& d);

/// A ~ B: A = lambda B with lambda nonzero.
bool aligned(LatticePoint a, LatticePoint b);
/// A !~ B in the strict sense A x B != 0.
inline bool not_aligned(LatticePoint a, LatticePoint b) { return cross(a, b) != 0; }

}  // namespace weyl
