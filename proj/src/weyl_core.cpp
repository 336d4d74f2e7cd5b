#include "weyl/weyl_core.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weyl {

namespace {

constexpr std::size_t kParallelPairs = 4096;

// Adds (lc X^a Y^b) * (rc X^c Y^d) into acc. The weight
// w_k = k! C(b,k) C(c,k) obeys w_{k+1} = w_k (b-k)(c-k) / (k+1), exactly.
void accumulate_term_product(LatticePoint left, const Scalar& lc, LatticePoint right, const Scalar& rc,
                             WeylElement& acc) {
  const Index a = left.i, b = left.j, c = right.i, d = right.j;
  const Scalar base = lc * rc;
  Integer weight = 1;
  const Index kmax = std::min(b, c);
  for (Index k = 0; k <= kmax; ++k) {
    acc.add_term({a + c - k, b + d - k}, base * Scalar(weight));
    if (k == kmax) break;
    weight *= static_cast<unsigned long>(b - k);
    weight *= static_cast<unsigned long>(c - k);
    mpz_divexact_ui(weight.get_mpz_t(), weight.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
}

}  // namespace

WeylElement normal_mul_serial(const WeylElement& p, const WeylElement& q) {
  WeylElement out;
  for (const auto& [le, lc] : p.terms()) {
    for (const auto& [re, rc] : q.terms()) accumulate_term_product(le, lc, re, rc, out);
  }
  return out;
}

WeylElement normal_mul_parallel(const WeylElement& p, const WeylElement& q) {
#ifdef _OPENMP
  const std::vector<std::pair<LatticePoint, Scalar>> left(p.terms().begin(), p.terms().end());
  const std::vector<std::pair<LatticePoint, Scalar>> right(q.terms().begin(), q.terms().end());
  const auto n = static_cast<long>(left.size());
  std::vector<WeylElement> partial(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
  {
    WeylElement& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
    for (long idx = 0; idx < n; ++idx) {
      const auto& [le, lc] = left[static_cast<std::size_t>(idx)];
      for (const auto& [re, rc] : right) accumulate_term_product(le, lc, re, rc, acc);
    }
  }

  WeylElement out;
  for (const auto& part : partial) out += part;
  return out;
#else
  return normal_mul_serial(p, q);
#endif
}

WeylElement normal_mul(const WeylElement& p, const WeylElement& q) {
#ifdef _OPENMP
  if (p.size() * q.size() >= kParallelPairs && omp_get_max_threads() > 1) return normal_mul_parallel(p, q);
#endif
  return normal_mul_serial(p, q);
}

WeylElement bracket(const WeylElement& p, const WeylElement& q) { return normal_mul(p, q) - normal_mul(q, p); }

WeylElement pow(const WeylElement& p, unsigned k) {
  WeylElement result = weyl_one();
  WeylElement base = p;
  while (k > 0) {
    if (k & 1U) result = normal_mul(result, base);
    k >>= 1U;
    if (k > 0) base = normal_mul(base, base);
  }
  return result;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

CommPoly pow(const CommPoly& base, unsigned k) {
  CommPoly result = CommPoly::constant(1);
  CommPoly b = base;
  while (k > 0) {
    if (k & 1U) result = result * b;
    k >>= 1U;
    if (k > 0) b = b * b;
  }
  return result;
}

CommPoly psi(const WeylElement& p) {
  CommPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

WeylElement psi_inv(const CommPoly& p) {
  WeylElement out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

WeylElement apply_tau(const WeylElement& p) {
  // X^i Y^j -> Y^i (-X)^j, renormalized.
  WeylElement out;
  for (const auto& [e, c] : p.terms()) {
    WeylElement image = normal_mul(WeylElement::monomial(0, e.i), WeylElement::monomial(e.j, 0));
    const Scalar signed_c = e.j % 2 == 0 ? c : Scalar(-c);
    out += signed_c * image;
  }
  return out;
}

WeylElement apply_phi(const WeylElement& p, const Scalar& mu, Index sigma) {
  if (sigma < 1) throw PreconditionError("apply_phi requires sigma >= 1");
  const WeylElement shifted_y = weyl_y() + WeylElement::monomial(sigma, 0, mu);
  std::vector<WeylElement> powers{weyl_one()};
  WeylElement out;
  for (const auto& [e, c] : p.terms()) {
    while (static_cast<Index>(powers.size()) <= e.j) powers.push_back(normal_mul(powers.back(), shifted_y));
    out += c * normal_mul(WeylElement::monomial(e.i, 0), powers[static_cast<std::size_t>(e.j)]);
  }
  return out;
}

ScalarMatrix matrix_rep(const WeylElement& p, std::size_t n) {
  ScalarMatrix m(n + 1, n + 1);
  for (std::size_t col = 0; col <= n; ++col) {
    const auto deg = static_cast<Index>(col);
    for (const auto& [e, c] : p.terms()) {
      if (e.j > deg) continue;
      // t^i (d/dt)^j t^m = m!/(m-j)! t^(m-j+i)
      const Index target = deg - e.j + e.i;
      if (target > static_cast<Index>(n)) continue;
      Integer falling = 1;
      for (Index s = 0; s < e.j; ++s) falling *= static_cast<unsigned long>(deg - s);
      m(static_cast<std::size_t>(target), col) += c * Scalar(falling);
    }
  }
  return m;
}

}  // namespace weyl
