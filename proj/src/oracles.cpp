#include "weyl/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "weyl/matrix.hpp"
#include "weyl/weyl_core.hpp"

namespace weyl {

namespace {

using Word = std::map<LatticePoint, Scalar, CanonicalOrder>;

void add_to(Word& w, LatticePoint e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = w.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) w.erase(it);
  }
}

// Normal form of X^a Y^b X, one rewriting step at a time:
// X^a Y^b X = (X^a Y^(b-1) X) Y + X^a Y^(b-1).
Word push_x(Index a, Index b) {
  Word out;
  if (b == 0) {
    out[{a + 1, 0}] = 1;
    return out;
  }
  for (const auto& [e, c] : push_x(a, b - 1)) add_to(out, {e.i, e.j + 1}, c);
  add_to(out, {a, b - 1}, 1);
  return out;
}

Word times_letter(const Word& w, char letter) {
  Word out;
  for (const auto& [e, c] : w) {
    if (letter == 'Y') {
      add_to(out, {e.i, e.j + 1}, c);
    } else {
      for (const auto& [f, d] : push_x(e.i, e.j)) add_to(out, f, c * d);
    }
  }
  return out;
}

}  // namespace

WeylElement rewrite_mul(const WeylElement& p, const WeylElement& q) {
  Word total;
  for (const auto& [le, lc] : p.terms()) {
    for (const auto& [re, rc] : q.terms()) {
      Word w;
      w[le] = lc * rc;
      for (Index s = 0; s < re.i; ++s) w = times_letter(w, 'X');
      for (Index s = 0; s < re.j; ++s) w = times_letter(w, 'Y');
      for (const auto& [e, c] : w) add_to(total, e, c);
    }
  }
  WeylElement out;
  for (const auto& [e, c] : total) out.add_term(e, c);
  return out;
}

bool representation_agrees(const WeylElement& p, const WeylElement& q, const WeylElement& product) {
  const Index n = p.deg_x() + q.deg_x() + p.deg_y() + q.deg_y() + 2;
  const Index valid = n - p.deg_x() - q.deg_x();
  const auto size = static_cast<std::size_t>(n);
  const ScalarMatrix lhs = matrix_rep(p, size) * matrix_rep(q, size);
  const ScalarMatrix rhs = matrix_rep(product, size);
  for (std::size_t col = 0; col <= static_cast<std::size_t>(valid); ++col) {
    for (std::size_t row = 0; row <= size; ++row) {
      if (lhs(row, col) != rhs(row, col)) return false;
    }
  }
  return true;
}

std::vector<Direction> brute_force_dirs(const WeylElement& p) {
  std::vector<Direction> out;
  const Index b = std::max<Index>(1, std::max(p.deg_x(), p.deg_y()));
  for (Index rho = -b; rho <= b; ++rho) {
    for (Index sigma = -b; sigma <= b; ++sigma) {
      if (std::gcd(rho, sigma) != 1) continue;
      const Direction d(rho, sigma);
      if (leading(p, d).size() > 1) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), ccw_before);
  return out;
}

std::int64_t dense_power_tcount(const UniPoly& f, std::int64_t k) {
  std::vector<Scalar> base(static_cast<std::size_t>(f.degree()) + 1);
  for (const auto& [e, c] : f.terms()) base[static_cast<std::size_t>(e)] = c;
  std::vector<Scalar> acc{Scalar(1)};
  for (std::int64_t s = 0; s < k; ++s) {
    std::vector<Scalar> next(acc.size() + base.size() - 1);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t b = 0; b < base.size(); ++b) next[a + b] += acc[a] * base[b];
    }
    acc = std::move(next);
  }
  return std::count_if(acc.begin(), acc.end(), [](const Scalar& c) { return c != 0; });
}

CommPoly comm_product(const CommPoly& a, const CommPoly& b) {
  std::map<LatticePoint, Scalar> acc;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) acc[ea + eb] += ca * cb;
  }
  CommPoly out;
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

}  // namespace weyl
