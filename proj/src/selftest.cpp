#include "weyl/selftest.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "weyl/format.hpp"
#include "weyl/random.hpp"
#include "weyl/weyl_core.hpp"

namespace weyl {

namespace {

enum Stream : std::uint64_t { kMul = 1, kRep, kDual, kPower, kBracketPower };

// Runs check(i) for every case; check returns the failing input text or
// nothing. Keeps the failure with the smallest index.
template <class Check>
SuiteResult run_cases(std::string name, std::int64_t cases, Check check) {
  SuiteResult r{std::move(name), cases, 0, {}};
  std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < cases; ++i) {
    std::optional<std::string> bad;
    try {
      bad = check(i);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    if (bad) {
#pragma omp critical(selftest_failure)
      {
        ++r.failures;
        if (i < first) {
          first = i;
          r.first_failure = *bad;
        }
      }
    }
  }
  return r;
}

std::string pair_text(const WeylElement& p, const WeylElement& q) { return "(" + render(p) + ") * (" + render(q) + ")"; }

}  // namespace

bool SelftestSummary::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

SuiteResult multiplication_suite(std::uint64_t seed, std::int64_t cases, const MulFn& mul) {
  return run_cases("multiplication", cases, [&](std::int64_t i) -> std::optional<std::string> {
    WeylElement p;
    WeylElement q;
    if (i == 0) {
      p = WeylElement::monomial(0, 2);
      q = WeylElement::monomial(2, 0);
    } else {
      Rng rng(derive_seed(seed, kMul, static_cast<std::uint64_t>(i)));
      p = random_element(rng, 8, 5);
      q = random_element(rng, 8, 5);
    }
    if (mul(p, q) != rewrite_mul(p, q)) return pair_text(p, q);
    return std::nullopt;
  });
}

SuiteResult representation_suite(std::uint64_t seed, std::int64_t cases) {
  return run_cases("representation", cases, [&](std::int64_t i) -> std::optional<std::string> {
    Rng rng(derive_seed(seed, kRep, static_cast<std::uint64_t>(i)));
    const WeylElement p = random_element(rng, 8, 5);
    const WeylElement q = random_element(rng, 8, 5);
    if (!representation_agrees(p, q, normal_mul(p, q))) return pair_text(p, q);
    return std::nullopt;
  });
}

SuiteResult duality_suite(std::uint64_t seed, std::int64_t cases) {
  return run_cases("hull duality", cases, [&](std::int64_t i) -> std::optional<std::string> {
    Rng rng(derive_seed(seed, kDual, static_cast<std::uint64_t>(i)));
    const WeylElement p = random_element(rng, 7, 7);
    if (dir_set(p) != brute_force_dirs(p)) return render(p);
    return std::nullopt;
  });
}

SuiteResult power_support_suite(std::uint64_t seed, std::int64_t cases) {
  return run_cases("power support", cases, [&](std::int64_t i) -> std::optional<std::string> {
    Rng rng(derive_seed(seed, kPower, static_cast<std::uint64_t>(i)));
    const UniPoly f = random_unipoly(rng, 12, 3);
    const std::int64_t k = 2 + static_cast<std::int64_t>(i % 3);
    const std::string text = "f = " + render(f) + ", k = " + std::to_string(k);
    const std::int64_t t = dense_power_tcount(f, k);
    const PowerSupport ps = power_support_check(f, k);
    if (ps.t != t || t < 4) return text;
    if (t == 4 && !(k == 2 && equiv_to_special(f))) return text;
    return std::nullopt;
  });
}

SuiteResult bracket_power_suite(std::uint64_t seed, std::int64_t cases) {
  return run_cases("bracket of powers", cases, [&](std::int64_t i) -> std::optional<std::string> {
    Rng rng(derive_seed(seed, kBracketPower, static_cast<std::uint64_t>(i)));
    const Direction d = random_positive_direction(rng, 5);
    const WeylElement r = i % 2 == 0 ? random_homogeneous(rng, d, 4) : random_element(rng, 4, 4);
    const WeylElement q = random_element(rng, 4, 4);
    const auto k = static_cast<unsigned>(1 + i % 4);
    const std::string text = "R = " + render(r) + ", Q = " + render(q) + ", k = " + std::to_string(k) +
                             ", dir = " + to_string(d);
    const WeylElement rq = bracket(r, q);
    if (rq.is_zero()) return std::nullopt;
    const WeylElement rk = pow(r, k);
    const WeylElement rkq = bracket(rk, q);
    const CommPoly lr = leading(r, d);
    const CommPoly expected = Scalar(static_cast<long>(k)) *
                              comm_product(pow(lr, k - 1), leading(rq, d));
    const CommPoly actual = rkq.is_zero() ? CommPoly{} : leading(rkq, d);
    if (expected != actual) return text;
    if (!bracket_rs(rk, q, d).is_zero() && bracket_rs(r, q, d).is_zero()) return text;
    return std::nullopt;
  });
}

SelftestSummary oracle_suite(std::uint64_t seed, std::int64_t cases) {
  SelftestSummary s;
  s.seed = seed;
  s.suites.push_back(multiplication_suite(seed, cases, normal_mul));
  s.suites.push_back(representation_suite(seed, cases));
  s.suites.push_back(duality_suite(seed, cases));
  s.suites.push_back(power_support_suite(seed, cases));
  s.suites.push_back(bracket_power_suite(seed, cases));
  return s;
}

}  // namespace weyl
