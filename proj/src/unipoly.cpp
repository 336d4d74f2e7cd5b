#include "weyl/unipoly.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weyl {

UniPoly UniPoly::monomial(std::int64_t exp, const Scalar& coeff) {
  UniPoly p;
  p.add_term(exp, coeff);
  return p;
}

UniPoly UniPoly::from_dense(std::span<const Scalar> coeffs) {
  UniPoly p;
  for (std::size_t e = 0; e < coeffs.size(); ++e) p.add_term(static_cast<std::int64_t>(e), coeffs[e]);
  return p;
}

void UniPoly::add_term(std::int64_t exp, const Scalar& coeff) {
  if (exp < 0) throw PreconditionError("negative exponent in univariate polynomial");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t UniPoly::degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

std::int64_t UniPoly::lowest() const {
  if (terms_.empty()) throw PreconditionError("lowest exponent of the zero polynomial");
  return terms_.begin()->first;
}

Scalar UniPoly::coeff(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar UniPoly::leading_coeff() const {
  if (terms_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  const std::int64_t lo = a.lowest() + b.lowest();
  std::vector<Scalar> acc(static_cast<std::size_t>(a.degree() + b.degree() - lo + 1));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  }
  auto hint = out.terms_.end();
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] != 0) hint = std::next(out.terms_.emplace_hint(hint, static_cast<std::int64_t>(k) + lo, std::move(acc[k])));
  }
  return out;
}

UniPoly pow(const UniPoly& f, unsigned k) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

UniPoly derivative(const UniPoly& f) {
  UniPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e > 0) out.add_term(e - 1, c * Scalar(static_cast<long>(e)));
  }
  return out;
}

UniPoly truncate(const UniPoly& f, std::int64_t prec) {
  UniPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e > prec) break;
    out.add_term(e, c);
  }
  return out;
}

UniPoly scale_variable(const UniPoly& f, const Scalar& lambda) {
  UniPoly out;
  for (const auto& [e, c] : f.terms()) {
    Scalar power = 1;
    for (std::int64_t s = 0; s < e; ++s) power *= lambda;
    out.add_term(e, c * power);
  }
  return out;
}

UniPoly substitute_power(const UniPoly& f, std::int64_t k) {
  if (k < 1) throw PreconditionError("substitute_power requires k >= 1");
  UniPoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(e * k, c);
  return out;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  DivMod r{UniPoly{}, a};
  const std::int64_t db = b.degree();
  const Scalar lb = b.leading_coeff();
  while (!r.remainder.is_zero() && r.remainder.degree() >= db) {
    const std::int64_t shift = r.remainder.degree() - db;
    const Scalar factor = r.remainder.leading_coeff() / lb;
    r.quotient.add_term(shift, factor);
    for (const auto& [e, c] : b.terms()) r.remainder.add_term(e + shift, -factor * c);
  }
  return r;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly rem = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(rem);
  }
  if (!x.is_zero()) x *= Scalar(1 / x.leading_coeff());
  return x;
}

std::int64_t t_count(const UniPoly& f) { return static_cast<std::int64_t>(f.size()); }

UniPoly reverse(const UniPoly& f) {
  const std::int64_t n = f.degree();
  UniPoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(n - e, c);
  return out;
}

Compressed strip_and_compress(const UniPoly& f) {
  const std::int64_t shift = f.lowest();
  std::int64_t stride = 0;
  for (const auto& [e, c] : f.terms()) stride = std::gcd(stride, e - shift);
  if (stride == 0) stride = 1;
  UniPoly core;
  for (const auto& [e, c] : f.terms()) core.add_term((e - shift) / stride, c);
  return {shift, stride, std::move(core)};
}

bool equiv_to_special(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("equiv_to_special of the zero polynomial");
  const Compressed c = strip_and_compress(f);
  if (c.core.size() != 3 || c.core.degree() != 2) return false;
  const Scalar& a0 = c.core.terms().at(0);
  const Scalar& a1 = c.core.terms().at(1);
  const Scalar& a2 = c.core.terms().at(2);
  return a1 * a1 == -2 * a0 * a2;
}

Scalar binomial(const Scalar& a, std::int64_t i) {
  Scalar out = 1;
  for (std::int64_t s = 0; s < i; ++s) {
    out *= a - s;
    out /= s + 1;
  }
  return out;
}

UniPoly kth_root_series(const UniPoly& f, std::int64_t k, std::int64_t prec) {
  if (k < 1) throw PreconditionError("kth_root_series requires k >= 1");
  if (prec < 0) throw PreconditionError("kth_root_series requires prec >= 0");
  if (f.coeff(0) != 1) throw PreconditionError("kth_root_series requires constant term 1");

  // u = sum_i C(1/k, i) h^i with h = f - 1; h^i starts at x^i.
  const UniPoly h = truncate(f - UniPoly::constant(1), prec);
  const Scalar exponent = make_scalar(1, k);
  UniPoly u = UniPoly::constant(1);
  UniPoly h_power = UniPoly::constant(1);
  Scalar coeff = 1;
  for (std::int64_t i = 1; i <= prec; ++i) {
    h_power = truncate(h_power * h, prec);
    if (h_power.is_zero()) break;
    coeff *= exponent - (i - 1);
    coeff /= i;
    u += coeff * h_power;
  }
  return u;
}

std::optional<KthRoot> poly_kth_root(const UniPoly& f, std::int64_t k) {
  if (k < 1) throw PreconditionError("poly_kth_root requires k >= 1");
  if (f.is_zero()) return std::nullopt;
  const std::int64_t shift = f.lowest();
  if (shift % k != 0) return std::nullopt;

  UniPoly g;
  for (const auto& [e, c] : f.terms()) g.add_term(e - shift, c);
  const Scalar mu = g.coeff(0);
  g *= Scalar(1 / mu);
  const std::int64_t deg = g.degree();
  if (deg % k != 0) return std::nullopt;

  UniPoly u = kth_root_series(g, k, deg / k);
  if (pow(u, static_cast<unsigned>(k)) != g) return std::nullopt;

  UniPoly root;
  for (const auto& [e, c] : u.terms()) root.add_term(e + shift / k, c);
  return KthRoot{mu, std::move(root)};
}

std::int64_t distinct_factor_count(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("distinct_factor_count of the zero polynomial");
  const std::int64_t n = f.degree();
  if (n == 0) return 0;
  return n - gcd(f, derivative(f)).degree();
}

namespace {

template <class T, class MulAdd>
std::vector<T> dense_power(const std::vector<T>& base, std::int64_t k, MulAdd mul_add) {
  std::vector<T> acc{T(1)};
  for (std::int64_t s = 0; s < k; ++s) {
    std::vector<T> next(acc.size() + base.size() - 1, T(0));
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t b = 0; b < base.size(); ++b) {
        if (base[b] != 0 && !mul_add(next[a + b], acc[a], base[b])) return {};
      }
    }
    acc = std::move(next);
  }
  return acc;
}

template <class T>
std::int64_t nonzero_count(const std::vector<T>& v) {
  return std::count_if(v.begin(), v.end(), [](const T& c) { return c != 0; });
}

}  // namespace

std::int64_t power_tcount(const UniPoly& f, std::int64_t k) {
  if (k < 0) throw PreconditionError("power_tcount requires k >= 0");
  if (f.is_zero()) return k == 0 ? 1 : 0;
  // f = x^v core(x^g) and scaling by a constant leave t(f^k) unchanged.
  const UniPoly core = strip_and_compress(f).core;
  Integer den = 1;
  for (const auto& [e, c] : core.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> big(static_cast<std::size_t>(core.degree()) + 1, Integer(0));
  bool small = true;
  for (const auto& [e, c] : core.terms()) {
    Integer& slot = big[static_cast<std::size_t>(e)];
    slot = c.get_num() * (den / c.get_den());
    small = small && slot.fits_slong_p();
  }

  if (small) {
    std::vector<long> base(big.size());
    for (std::size_t n = 0; n < big.size(); ++n) base[n] = big[n].get_si();
    const auto acc = dense_power(base, k, [](long& out, long a, long b) {
      long prod = 0;
      return !__builtin_mul_overflow(a, b, &prod) && !__builtin_add_overflow(out, prod, &out);
    });
    if (!acc.empty()) return nonzero_count(acc);
  }
  const auto acc = dense_power(big, k, [](Integer& out, const Integer& a, const Integer& b) {
    mpz_addmul(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
  });
  return nonzero_count(acc);
}

PowerSupport power_support_check(const UniPoly& f, std::int64_t k) {
  if (t_count(f) < 3) throw PreconditionError("power_support_check requires t(f) >= 3");
  if (k < 2) throw PreconditionError("power_support_check requires k >= 2");
  const std::int64_t t = power_tcount(f, k);
  const bool boundary = t == 4;
  if (boundary && !(k == 2 && equiv_to_special(f))) {
    throw InvariantError("t(f^k) == 4 without k == 2 and f ~ 1 + x - x^2/2");
  }
  return {t, boundary};
}

namespace {

PowerScanRow scan_one(const UniPoly& f, std::int64_t k) {
  PowerScanRow row;
  row.t_power = power_tcount(f, k);
  if (row.t_power == 4) row.special = equiv_to_special(f);
  return row;
}

}  // namespace

std::vector<PowerScanRow> power_support_scan_serial(std::span<const UniPoly> fs, std::int64_t k) {
  std::vector<PowerScanRow> rows(fs.size());
  for (std::size_t n = 0; n < fs.size(); ++n) rows[n] = scan_one(fs[n], k);
  return rows;
}

std::vector<PowerScanRow> power_support_scan(std::span<const UniPoly> fs, std::int64_t k) {
  std::vector<PowerScanRow> rows(fs.size());
  const auto n = static_cast<long>(fs.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (long idx = 0; idx < n; ++idx) {
    rows[static_cast<std::size_t>(idx)] = scan_one(fs[static_cast<std::size_t>(idx)], k);
  }
  return rows;
}

}  // namespace weyl
