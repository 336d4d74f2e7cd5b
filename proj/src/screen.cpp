#include "weyl/screen.hpp"

#include <algorithm>
#include <map>

#include "weyl/format.hpp"

namespace weyl {

namespace {

const LatticePoint kX2{2, 0};
const LatticePoint kY2{0, 2};

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Data shared by the case table and the bound rows.
struct UpperFacts {
  Index v11;
  LeadingPolynomial f11;
  Endpoints se11;
  std::int64_t factors;
};

UpperFacts upper_facts(const WeylElement& p) {
  const Direction d11(1, 1);
  UpperFacts facts{valuation(p, d11).value(), extract_fP(p, d11), st_en(p, d11), 0};
  facts.factors = distinct_factor_count(facts.f11.f);
  return facts;
}

}  // namespace

std::string CaseLabel::name() const {
  switch (kind) {
    case CaseKind::k1a: return "1a";
    case CaseKind::k1b: return "1b";
    case CaseKind::k1c: return "1c";
    case CaseKind::k2a: return "2a";
    case CaseKind::k2b: return "2b";
    case CaseKind::k2c: return "2c";
    case CaseKind::k3: return "3";
    case CaseKind::excluded: return "EXCLUDED";
  }
  return "EXCLUDED";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::generates_by_corollary: return "GENERATES_BY_COROLLARY";
    case Verdict::necessary_condition_violated: return "NECESSARY_CONDITION_VIOLATED";
    case Verdict::consistent_with_bounds: return "CONSISTENT_WITH_BOUNDS";
    case Verdict::contradicts_bound: return "CONTRADICTS_BOUND";
  }
  return "";
}

Classification classify_case(const WeylElement& p) {
  if (p.is_zero()) throw PreconditionError("classify_case of zero");
  Classification out;
  const Index v11 = valuation(p, Direction(1, 1)).value();
  out.witnesses.push_back({"v_{1,1}(P)", std::to_string(v11)});
  if (v11 <= 0) {
    out.label = {CaseKind::excluded, "v_{1,1}(P) <= 0"};
    return out;
  }

  const UpperFacts facts = upper_facts(p);
  const LatticePoint st = facts.se11.st;
  const LatticePoint en = facts.se11.en;
  out.witnesses.push_back({"f_P", render(facts.f11.f, 'z')});
  out.witnesses.push_back({"#factors(f_P)", std::to_string(facts.factors)});
  out.witnesses.push_back({"st_{1,1}(P)", to_string(st)});
  out.witnesses.push_back({"en_{1,1}(P)", to_string(en)});

  const bool st_x = aligned(st, kX2);
  const bool en_y = aligned(en, kY2);
  switch (facts.factors) {
    case 0:
      if (st.i > 0 && st.j > 0) {
        out.label.kind = CaseKind::k1a;
      } else if (st.i == 0) {
        out.label.kind = CaseKind::k1b;
      } else {
        out.label.kind = CaseKind::k1c;
      }
      break;
    case 1:
      out.witnesses.push_back({"st ~ (2,0)", yes_no(st_x)});
      out.witnesses.push_back({"en ~ (0,2)", yes_no(en_y)});
      if (st_x && en_y) {
        out.label.kind = CaseKind::k2a;
      } else if (st_x && not_aligned(en, kY2)) {
        out.label.kind = CaseKind::k2b;
      } else if (not_aligned(st, kX2) && en_y) {
        out.label.kind = CaseKind::k2c;
      } else {
        out.label = {CaseKind::excluded, "one distinct factor but neither st ~ (2,0) nor en ~ (0,2)"};
      }
      break;
    case 2:
      out.witnesses.push_back({"st ~ (2,0)", yes_no(st_x)});
      out.witnesses.push_back({"en ~ (0,2)", yes_no(en_y)});
      if (st_x && en_y) {
        out.label.kind = CaseKind::k3;
      } else {
        out.label = {CaseKind::excluded, "two distinct factors without st ~ (2,0) and en ~ (0,2)"};
      }
      break;
    default:
      out.label = {CaseKind::excluded, "#factors(f_P) > 2"};
      break;
  }
  return out;
}

BoundReport mass_bound_report(const WeylElement& p) {
  BoundReport out;
  if (p.is_zero()) {
    out.rationale = "zero element";
    return out;
  }

  const auto subrect = is_subrectangular(p);
  const LatticePoint en10 = st_en(p, Direction(1, 0)).en;
  const Index level_en10 = en10.i - en10.j;
  const CommPoly l11 = leading(p, Direction(1, 1));
  const bool l11_y_power = l11.is_monomial() && l11.terms().begin()->first.i == 0;
  const UpperFacts facts = upper_facts(p);
  const LatticePoint st11 = facts.se11.st;
  const LatticePoint en11 = facts.se11.en;
  const bool st_x = aligned(st11, kX2);
  const bool en_y = aligned(en11, kY2);
  const bool st_not_x = not_aligned(st11, kX2);

  out.predicates = {
      {"subrectangular", subrect ? to_string(*subrect) : "false"},
      {"en_{1,0}(P)", to_string(en10)},
      {"v_{1,-1}(en_{1,0}(P))", std::to_string(level_en10)},
      {"l_{1,1}(P) = lambda*y^n", yes_no(l11_y_power)},
      {"#factors(f_P)", std::to_string(facts.factors)},
      {"st_{1,1}(P)", to_string(st11)},
      {"en_{1,1}(P)", to_string(en11)},
  };

  struct Row {
    bool holds;
    int bound;
    const char* text;
  };
  const Row rows[] = {
      {subrect.has_value() && level_en10 < 0, 5, "P subrectangular and v_{1,-1}(en_{1,0}(P)) < 0"},
      {l11_y_power && level_en10 < 0, 5, "l_{1,1}(P) = lambda*y^n and v_{1,-1}(en_{1,0}(P)) < 0"},
      {l11_y_power && level_en10 > 0, 10, "l_{1,1}(P) = lambda*y^n and v_{1,-1}(en_{1,0}(P)) > 0"},
      {facts.factors == 1 && st_x && en_y, 17, "#factors(f_P) = 1, st_{1,1}(P) ~ (2,0), en_{1,1}(P) ~ (0,2)"},
      {facts.factors == 1 && level_en10 < 0 && en10 == st11 && st_not_x && en_y, 5,
       "#factors(f_P) = 1, v_{1,-1}(en_{1,0}(P)) < 0, en_{1,0}(P) = st_{1,1}(P) !~ (2,0), en_{1,1}(P) ~ (0,2)"},
      {facts.factors == 1 && level_en10 > 0 && en10 == st11 && st_not_x && en_y, 10,
       "#factors(f_P) = 1, v_{1,-1}(en_{1,0}(P)) > 0, en_{1,0}(P) = st_{1,1}(P) !~ (2,0), en_{1,1}(P) ~ (0,2)"},
      {facts.factors == 2 && st_x && en_y, 5, "#factors(f_P) = 2, st_{1,1}(P) ~ (2,0), en_{1,1}(P) ~ (0,2)"},
  };
  for (int n = 0; n < 7; ++n) {
    if (!rows[n].holds) continue;
    out.row = n + 1;
    out.implied_bound = rows[n].bound;
    out.rationale = "row " + std::to_string(n + 1) + ": " + rows[n].text + (rows[n].bound == 17 ? " => m(P) > 16" : " => m(P) >= " + std::to_string(rows[n].bound));
    return out;
  }
  out.rationale = "no row hypothesis holds";
  return out;
}

namespace {

// The valuation signs a counterexample element must have; returns the
// first failing one.
std::optional<Witness> necessary_condition_failure(const WeylElement& e, const std::string& name) {
  std::vector<Direction> dirs{Direction(1, -1), Direction(-1, 1), Direction(1, 0), Direction(1, 1),
                              Direction(0, 1)};
  for (const Direction& d : dir_set(e)) {
    if (d.is_positive() && std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
  }
  for (const Direction& d : dirs) {
    const Valuation v = valuation(e, d);
    if (v.is_neg_infinity() || v.value() <= 0) {
      return Witness{"v_" + to_string(d) + "(" + name + ")",
                     v.is_neg_infinity() ? "-inf" : std::to_string(v.value())};
    }
  }
  return std::nullopt;
}

}  // namespace

ScreenReport check_pair(const WeylElement& p, const WeylElement& q) {
  ScreenReport out;
  const WeylElement c = bracket(p, q);
  out.bracket_ok = c == weyl_one();
  out.witnesses.push_back({"[P,Q]", render(c)});
  out.mass_p = mass(p);
  out.mass_q = mass(q);
  if (!out.bracket_ok) return out;

  out.witnesses.push_back({"m(P)", std::to_string(out.mass_p)});
  out.witnesses.push_back({"m(Q)", std::to_string(out.mass_q)});
  if (std::min(out.mass_p, out.mass_q) <= 4) {
    out.verdict = Verdict::generates_by_corollary;
    return out;
  }

  for (const auto& [elem, name] : {std::pair{&p, "P"}, std::pair{&q, "Q"}}) {
    if (auto failure = necessary_condition_failure(*elem, name)) {
      out.witnesses.push_back(*failure);
      out.verdict = Verdict::necessary_condition_violated;
      return out;
    }
  }

  const Classification cls = classify_case(p);
  out.case_label = cls.label;
  out.witnesses.insert(out.witnesses.end(), cls.witnesses.begin(), cls.witnesses.end());
  const BoundReport bound = mass_bound_report(p);
  out.witnesses.push_back({"bound rationale", bound.rationale});
  if (!cls.label.is_excluded()) out.implied_bound = bound.implied_bound;
  const bool below = out.implied_bound && out.mass_p < *out.implied_bound;
  out.verdict = below ? Verdict::contradicts_bound : Verdict::consistent_with_bounds;
  return out;
}

std::vector<Decomposition> decompose_leading_power(const WeylElement& p, const Direction& d, std::int64_t max_k) {
  if (p.is_zero()) throw PreconditionError("decompose_leading_power of zero");
  const CommPoly lead = leading(p, d);
  const LeadingPolynomial lp = extract_fP(p, d);
  if (max_k <= 0) max_k = std::max<std::int64_t>(2, lp.st.i + lp.st.j + lp.f.degree());

  std::vector<Decomposition> out;
  for (std::int64_t k = 2; k <= max_k; ++k) {
    if (lp.st.i % k != 0 || lp.st.j % k != 0) continue;
    const auto root = poly_kth_root(lp.f, k);
    if (!root) continue;

    const LatticePoint base{lp.st.i / k, lp.st.j / k};
    bool representable = true;
    for (const auto& [e, c] : root->root.terms()) {
      if (e % d.rho() != 0 || base.i - d.sigma() * (e / d.rho()) < 0) representable = false;
    }
    if (!representable) continue;

    const WeylElement r = psi_inv(leading_from_fP({base, root->root}, d));
    if (root->mu * pow(psi(r), static_cast<unsigned>(k)) != lead) {
      throw InvariantError("leading power decomposition failed verification");
    }
    out.push_back({k, r, root->mu});
  }
  return out;
}

bool FSolution::contains(const WeylElement& f) const {
  // Coordinates of f - particular must lie in the span of the kernel.
  std::vector<Scalar> diff(points.size());
  for (const auto& [e, c] : f.terms()) {
    if (std::find(points.begin(), points.end(), e) == points.end()) return false;
  }
  for (std::size_t n = 0; n < points.size(); ++n) diff[n] = f.coeff(points[n]) - particular.coeff(points[n]);
  ScalarMatrix basis(points.size(), kernel.size());
  for (std::size_t col = 0; col < kernel.size(); ++col) {
    for (std::size_t n = 0; n < points.size(); ++n) basis(n, col) = kernel[col].coeff(points[n]);
  }
  return solve_affine(basis, diff).has_value();
}

std::optional<FSolution> find_F(const WeylElement& r, const Direction& d, Index bound) {
  if (r.is_zero()) throw PreconditionError("find_F of zero");
  if (!d.is_positive()) throw PreconditionError("find_F needs rho + sigma > 0");
  if (bound < 0) throw PreconditionError("find_F needs a nonnegative bound");
  const CommPoly target = psi(r);
  if (leading(r, d) != target) throw PreconditionError("find_F needs R to be homogeneous for the direction");

  const Index level = valuation(r, d).value();
  const Index weight = d.rho() + d.sigma();
  std::vector<LatticePoint> points;
  for (Index u = 0; u <= bound; ++u) {
    for (Index v = 0; v <= bound; ++v) {
      if (d.weight({u, v}) == weight) points.push_back({u, v});
    }
  }
  if (points.empty()) return std::nullopt;

  // Column n: the level-v(R) part of [R, X^u Y^v]. Nothing lies above it.
  std::vector<CommPoly> columns;
  std::map<LatticePoint, std::size_t, CanonicalOrder> rows;
  for (const auto& [e, c] : target.terms()) rows.try_emplace(e, rows.size());
  for (const LatticePoint& pt : points) {
    CommPoly col;
    const WeylElement br = bracket(r, WeylElement::monomial(pt.i, pt.j));
    for (const auto& [e, c] : br.terms()) {
      const Index w = d.weight(e);
      if (w > level) throw InvariantError("bracket exceeds the graded bound");
      if (w == level) {
        col.add_term(e, c);
        rows.try_emplace(e, rows.size());
      }
    }
    columns.push_back(std::move(col));
  }

  ScalarMatrix a(rows.size(), points.size());
  std::vector<Scalar> rhs(rows.size());
  for (std::size_t n = 0; n < columns.size(); ++n) {
    for (const auto& [e, c] : columns[n].terms()) a(rows.at(e), n) = c;
  }
  for (const auto& [e, c] : target.terms()) rhs[rows.at(e)] = c;

  const auto sol = solve_affine(a, rhs);
  if (!sol) return std::nullopt;

  auto assemble = [&](const std::vector<Scalar>& coords) {
    WeylElement f;
    for (std::size_t n = 0; n < points.size(); ++n) f.add_term(points[n], coords[n]);
    return f;
  };
  FSolution out{d, bound, points, assemble(sol->particular), {}};
  for (const auto& k : sol->kernel) out.kernel.push_back(assemble(k));
  return out;
}

UntwistResult reduce_upper_edge(const WeylElement& p, int max_iters) {
  UntwistResult out{p, {}};
  const LatticePoint diagonal{1, 1};
  const LatticePoint vertical{0, 1};
  for (int iter = 0; iter < max_iters; ++iter) {
    const WeylElement& cur = out.reduced;
    if (cur.size() < 2) break;
    const Direction pred = succ_pred(cur, Direction(0, 1)).pred;
    // Continue only while (1,1) < pred < (0,1) and pred = (1, sigma).
    if (!(pred.is_positive() && cross(diagonal, pred.as_point()) > 0 && cross(pred.as_point(), vertical) > 0)) break;
    if (pred.rho() != 1) break;

    const LeadingPolynomial lp = extract_fP(cur, pred);
    if (lp.st.j != 0) break;
    const std::int64_t k = lp.f.degree();
    const auto root = poly_kth_root(lp.f, k);
    if (!root || root->root.size() != 2 || root->root.degree() != 1) break;

    // f(z) = a0 (1 + beta z)^k, so l = lambda x^(n - sigma k) (y - mu x^sigma)^k with mu = -1/beta.
    const Scalar mu = -1 / root->root.coeff(1);
    const Index sigma = pred.sigma();
    if (!out.trace.empty() && sigma >= out.trace.back().sigma) {
      throw InvariantError("upper-edge reduction: sigma did not strictly decrease");
    }
    out.reduced = apply_phi(cur, mu, sigma);
    out.trace.push_back({sigma, mu});
  }
  return out;
}

WeylElement apply_trace(const WeylElement& p, const std::vector<UntwistStep>& trace) {
  WeylElement out = p;
  for (const auto& step : trace) out = apply_phi(out, step.mu, step.sigma);
  return out;
}

}  // namespace weyl
