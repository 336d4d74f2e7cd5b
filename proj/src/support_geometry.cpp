#include "weyl/support_geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "weyl/weyl_core.hpp"

namespace weyl {

Direction::Direction(Index rho, Index sigma) : rho_(rho), sigma_(sigma) {
  if (std::gcd(rho, sigma) != 1) {
    throw PreconditionError("direction (" + std::to_string(rho) + "," + std::to_string(sigma) +
                            ") is not a coprime pair");
  }
}

std::strong_ordering compare_directions(const Direction& a, const Direction& b) {
  if (a == b) return std::strong_ordering::equal;
  if (a == -b) throw PreconditionError("opposite directions lie in no common interval");
  return cross(a.as_point(), b.as_point()) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool less_in_closed_upper(const Direction& a, const Direction& b) {
  if (a.rho() + a.sigma() < 0 || b.rho() + b.sigma() < 0) {
    throw PreconditionError("direction outside the closed interval rho + sigma >= 0");
  }
  const Direction lowest(1, -1);
  const Direction highest(-1, 1);
  if (a == b) return false;
  if (a == lowest || b == highest) return true;
  if (b == lowest || a == highest) return false;
  return cross(a.as_point(), b.as_point()) > 0;
}

namespace {

// 0 for directions in [(1,-1), (-1,1)) counterclockwise, 1 for the rest.
int half_from_start(const Direction& d) {
  const LatticePoint start{1, -1};
  const Index c = cross(start, d.as_point());
  const Index dot = start.i * d.rho() + start.j * d.sigma();
  return (c > 0 || (c == 0 && dot > 0)) ? 0 : 1;
}

template <class Tag>
Valuation valuation_impl(const BiPoly<Tag>& p, const Direction& d) {
  if (p.is_zero()) return Valuation::neg_infinity();
  Index best = d.weight(p.terms().begin()->first);
  for (const auto& [e, c] : p.terms()) best = std::max(best, d.weight(e));
  return Valuation(best);
}

template <class Tag>
CommPoly leading_impl(const BiPoly<Tag>& p, const Direction& d) {
  if (p.is_zero()) throw PreconditionError("leading term of zero");
  const Index v = valuation_impl(p, d).value();
  CommPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (d.weight(e) == v) out.add_term(e, c);
  }
  return out;
}

template <class Tag>
Index mass_impl(const BiPoly<Tag>& p) {
  std::set<Index> levels;
  for (const auto& [e, c] : p.terms()) levels.insert(e.i - e.j);
  return static_cast<Index>(levels.size());
}

template <class Tag>
NewtonPolygon hull_impl(const BiPoly<Tag>& p) {
  if (p.is_zero()) throw PreconditionError("Newton polygon of zero");
  std::vector<LatticePoint> pts;
  pts.reserve(p.size());
  for (const auto& [e, c] : p.terms()) pts.push_back(e);
  std::sort(pts.begin(), pts.end());
  if (pts.size() == 1) return {pts};

  // Andrew's monotone chain; collinear points are dropped.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pt - hull[k - 2]) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t n = pts.size() - 1, lower = k + 1; n-- > 0;) {
    const auto& pt = pts[n];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pt - hull[k - 2]) <= 0) --k;
    hull[k++] = pt;
  }
  hull.resize(k - 1);
  return {hull};
}

LatticePoint single_point(const CommPoly& p) {
  if (p.size() != 1) throw InvariantError("expected a monomial");
  return p.terms().begin()->first;
}

template <class Tag>
Endpoints st_en_positive(const BiPoly<Tag>& p, const Direction& d) {
  const CommPoly lead = leading_impl(p, d);
  return {single_point(leading(lead, Direction(1, -1))), single_point(leading(lead, Direction(-1, 1)))};
}

template <class Tag>
LeadingPolynomial extract_impl(const BiPoly<Tag>& p, const Direction& d) {
  if (d.rho() <= 0) throw PreconditionError("f_P is defined only for rho > 0");
  if (!d.is_positive()) throw PreconditionError("f_P requires rho + sigma > 0");
  if (p.is_zero()) throw PreconditionError("f_P of zero");
  const CommPoly lead = leading_impl(p, d);
  const LatticePoint st = single_point(leading(lead, Direction(1, -1)));
  LeadingPolynomial out{st, UniPoly{}};
  for (const auto& [e, c] : lead.terms()) {
    // e = st + l (-sigma, rho), coefficient a_l sits at exponent rho l.
    const Index exp = e.j - st.j;
    if (exp < 0 || exp % d.rho() != 0 || e.i != st.i - d.sigma() * (exp / d.rho())) {
      throw InvariantError("leading term is not on the expected edge");
    }
    out.f.add_term(exp, c);
  }
  return out;
}

}  // namespace

Index Valuation::value() const {
  if (!value_) throw InvariantError("valuation of zero is -infinity");
  return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) {
    return static_cast<int>(!a.is_neg_infinity()) <=> static_cast<int>(!b.is_neg_infinity());
  }
  return *a.value_ <=> *b.value_;
}

bool ccw_before(const Direction& a, const Direction& b) {
  const int ha = half_from_start(a);
  const int hb = half_from_start(b);
  if (ha != hb) return ha < hb;
  return cross(a.as_point(), b.as_point()) > 0;
}

Valuation valuation(const WeylElement& p, const Direction& d) { return valuation_impl(p, d); }
Valuation valuation(const CommPoly& p, const Direction& d) { return valuation_impl(p, d); }

CommPoly leading(const WeylElement& p, const Direction& d) { return leading_impl(p, d); }
CommPoly leading(const CommPoly& p, const Direction& d) { return leading_impl(p, d); }

Index mass(const WeylElement& p) { return mass_impl(p); }
Index mass(const CommPoly& p) { return mass_impl(p); }

std::vector<std::pair<Index, WeylElement>> graded_components(const WeylElement& p) {
  std::map<Index, WeylElement, std::greater<>> levels;
  for (const auto& [e, c] : p.terms()) levels[e.i - e.j].add_term(e, c);
  return {levels.begin(), levels.end()};
}

NewtonPolygon newton_polygon(const WeylElement& p) { return hull_impl(p); }
NewtonPolygon newton_polygon(const CommPoly& p) { return hull_impl(p); }

Direction NewtonPolygon::edge_normal(std::size_t k) const {
  if (vertices.size() < 2) throw PreconditionError("a single point has no edges");
  const LatticePoint e = vertices[(k + 1) % vertices.size()] - vertices[k % vertices.size()];
  const Index g = std::gcd(e.i, e.j);
  return Direction(e.j / g, -e.i / g);
}

std::vector<Direction> dir_set(const WeylElement& p) {
  const NewtonPolygon hull = newton_polygon(p);
  std::vector<Direction> dirs;
  for (std::size_t k = 0; k < hull.edge_count(); ++k) dirs.push_back(hull.edge_normal(k));
  std::sort(dirs.begin(), dirs.end(), ccw_before);
  return dirs;
}

Endpoints st_en_walk(const WeylElement& p, const Direction& d) {
  const NewtonPolygon hull = newton_polygon(p);
  const auto& v = hull.vertices;
  const std::size_t n = v.size();
  if (n == 1) return {v[0], v[0]};

  Index best = d.weight(v[0]);
  for (const auto& pt : v) best = std::max(best, d.weight(pt));
  std::vector<bool> top(n);
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    top[k] = d.weight(v[k]) == best;
    count += top[k] ? 1 : 0;
  }

  if (count == 1) {
    const auto k = static_cast<std::size_t>(std::find(top.begin(), top.end(), true) - top.begin());
    return {v[k], v[k]};
  }
  if (n == 2) {
    // Degenerate polygon: the edge v0 -> v1 is the one whose outward
    // normal is d, otherwise it is v1 -> v0.
    return hull.edge_normal(0) == d ? Endpoints{v[0], v[1]} : Endpoints{v[1], v[0]};
  }
  Endpoints out{};
  for (std::size_t k = 0; k < n; ++k) {
    if (!top[k]) continue;
    if (!top[(k + n - 1) % n]) out.st = v[k];
    if (!top[(k + 1) % n]) out.en = v[k];
  }
  return out;
}

Endpoints st_en(const WeylElement& p, const Direction& d) {
  if (p.is_zero()) throw PreconditionError("st/en of zero");
  if (d.is_positive()) return st_en_positive(p, d);
  return st_en_walk(p, d);
}

Neighbours succ_pred(const WeylElement& p, const Direction& d) {
  if (p.is_zero() || p.is_monomial()) throw PreconditionError("Succ/Pred need an element that is not a monomial");
  const std::vector<Direction> dirs = dir_set(p);
  // dirs is sorted counterclockwise; find the first strictly after d.
  auto after = std::upper_bound(dirs.begin(), dirs.end(), d, ccw_before);
  const Direction succ = after == dirs.end() ? dirs.front() : *after;
  auto before = std::lower_bound(dirs.begin(), dirs.end(), d, ccw_before);
  const Direction pred = before == dirs.begin() ? dirs.back() : *std::prev(before);
  return {succ, pred};
}

LeadingPolynomial extract_fP(const WeylElement& p, const Direction& d) { return extract_impl(p, d); }
LeadingPolynomial extract_fP(const CommPoly& p, const Direction& d) { return extract_impl(p, d); }

CommPoly leading_from_fP(const LeadingPolynomial& lp, const Direction& d) {
  CommPoly out;
  for (const auto& [e, c] : lp.f.terms()) {
    const Index l = e / d.rho();
    out.add_term({lp.st.i - d.sigma() * l, lp.st.j + d.rho() * l}, c);
  }
  return out;
}

std::optional<LatticePoint> is_subrectangular(const WeylElement& p) {
  if (p.is_zero()) throw PreconditionError("subrectangularity of zero");
  const LatticePoint corner{p.deg_x(), p.deg_y()};
  if (corner.i >= 1 && corner.j >= 1 && p.contains(corner)) return corner;
  return std::nullopt;
}

CommPoly bracket_rs(const WeylElement& p, const WeylElement& q, const Direction& d) {
  if (p.is_zero() || q.is_zero()) throw PreconditionError("graded bracket needs nonzero operands");
  if (!d.is_positive()) throw PreconditionError("graded bracket needs rho + sigma > 0");
  const WeylElement c = bracket(p, q);
  if (c.is_zero()) return {};
  const Index bound = valuation(p, d).value() + valuation(q, d).value() - (d.rho() + d.sigma());
  const Index vc = valuation(c, d).value();
  if (vc > bound) throw InvariantError("v([P,Q]) exceeds v(P) + v(Q) - (rho + sigma)");
  if (vc < bound) return {};
  return leading(c, d);
}

bool aligned(LatticePoint a, LatticePoint b) {
  const LatticePoint zero{};
  return a != zero && b != zero && cross(a, b) == 0;
}

}  // namespace weyl
