#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/support_geometry.hpp"
#include "weyl/weyl_core.hpp"

namespace weyl {

struct Witness {
  std::string name;
  std::string value;
};

enum class CaseKind { k1a, k1b, k1c, k2a, k2b, k2c, k3, excluded };

/// Case of the (1,1)-leading term of P. `reason` is set for excluded.
struct CaseLabel {
  CaseKind kind = CaseKind::excluded;
  std::string reason;

  std::string name() const;
  bool is_excluded() const noexcept { return kind == CaseKind::excluded; }
};

struct Classification {
  CaseLabel label;
  std::vector<Witness> witnesses;
};

/// Splits l_{1,1}(P) into (st, f_P), counts distinct linear factors of f_P
/// and checks the alignments of st and en with (2,0) and (0,2).
/// Throws PreconditionError on zero.
Classification classify_case(const WeylElement& p);

struct BoundReport {
  std::optional<int> implied_bound;  // 5, 10, or 17 for "> 16"
  int row = 0;                       // 1..7, 0 when nothing matched
  std::string rationale;
  std::vector<Witness> predicates;
};

/// Evaluates the hypotheses of the seven mass-bound rows on P and returns
/// the first that holds. The bounds are conditional on (P, Q) being a
/// counterexample; nothing here checks that.
BoundReport mass_bound_report(const WeylElement& p);

enum class Verdict {
  generates_by_corollary,
  necessary_condition_violated,
  consistent_with_bounds,
  contradicts_bound,
};

std::string to_string(Verdict v);

struct ScreenReport {
  bool bracket_ok = false;
  Index mass_p = 0;
  Index mass_q = 0;
  std::optional<CaseLabel> case_label;
  std::optional<int> implied_bound;
  std::optional<Verdict> verdict;  // empty when [P,Q] != 1
  std::vector<Witness> witnesses;
};

ScreenReport check_pair(const WeylElement& p, const WeylElement& q);

struct Decomposition {
  std::int64_t k;
  WeylElement root;
  Scalar mu;
};

/// All (k, R, mu) with k >= 2, R (rho,sigma)-homogeneous and
/// mu psi(R)^k = l_{rho,sigma}(P). max_k = 0 picks a bound from the degree
/// of the leading term. Requires rho > 0 and rho + sigma > 0.
std::vector<Decomposition> decompose_leading_power(const WeylElement& p, const Direction& d,
                                                   std::int64_t max_k = 0);

/// Affine set of (rho,sigma)-homogeneous F with v(F) = rho + sigma,
/// exponents in [0, bound]^2, and [R,F]_{rho,sigma} = psi(R).
struct FSolution {
  Direction dir;
  Index bound;
  std::vector<LatticePoint> points;  // unknown coefficients, in this order
  WeylElement particular;
  std::vector<WeylElement> kernel;

  /// Whether F lies in particular + span(kernel).
  bool contains(const WeylElement& f) const;
};

/// Throws PreconditionError if R is zero, not homogeneous for d, or
/// rho + sigma <= 0. Empty result means none within the bound.
std::optional<FSolution> find_F(const WeylElement& r, const Direction& d, Index bound);

struct UntwistStep {
  Index sigma;
  Scalar mu;
};

struct UntwistResult {
  WeylElement reduced;
  std::vector<UntwistStep> trace;
};

/// Repeatedly straightens the upper edge: while Pred_P(0,1) = (1,sigma) with
/// sigma > 1 and l_{1,sigma}(P) = lambda x^(n - sigma k) (y - mu x^sigma)^k,
/// replaces P by its image under Y -> Y + mu X^sigma.
UntwistResult reduce_upper_edge(const WeylElement& p, int max_iters);

/// Applies the substitutions of a trace, in order.
WeylElement apply_trace(const WeylElement& p, const std::vector<UntwistStep>& trace);

}  // namespace weyl
