#include <doctest.h>

#include "helpers.hpp"
#include "weyl/oracles.hpp"
#include "weyl/unipoly.hpp"

using namespace weyl;
using weyl::test::U;

TEST_CASE("arithmetic basics") {
  CHECK(U("(1 + x)^3") == U("1 + 3*x + 3*x^2 + x^3"));
  CHECK(derivative(U("1 + x + x^4")) == U("1 + 4*x^3"));
  const DivMod dm = divmod(U("x^3 - 1"), U("x - 1"));
  CHECK(dm.quotient == U("x^2 + x + 1"));
  CHECK(dm.remainder.is_zero());
  CHECK(gcd(U("(x - 1)^2*(x + 2)"), U("(x - 1)*(x + 3)")) == U("x - 1"));
  CHECK(gcd(U("2*x + 4"), U("3*x + 6")) == U("x + 2"));
  CHECK(gcd(UniPoly{}, UniPoly{}).is_zero());
  CHECK_THROWS_AS(divmod(U("x"), UniPoly{}), PreconditionError);
  CHECK(scale_variable(U("1 + x^2"), 3) == U("1 + 9*x^2"));
  CHECK(substitute_power(U("1 + x"), 4) == U("1 + x^4"));
  CHECK(truncate(U("1 + x + x^5"), 4) == U("1 + x"));
}

TEST_CASE("t_count examples") {
  CHECK(t_count(U("1 + 2*y^3 + y^6")) == 3);
  CHECK(t_count(UniPoly{}) == 0);
  CHECK(t_count(pow(U("1 + x + x^2"), 2)) == 5);
}

TEST_CASE("reverse examples") {
  CHECK(reverse(U("1 + 2*x^3")) == U("2 + x^3"));
  CHECK(reverse(U("1 + x - 1/2*x^2")) == U("-1/2 + x + x^2"));
}

TEST_CASE("strip_and_compress examples") {
  const Compressed a = strip_and_compress(U("2*x^4 + 2*x^8 - x^12"));
  CHECK(a.shift == 4);
  CHECK(a.stride == 4);
  CHECK(a.core == U("2 + 2*x - x^2"));
  const Compressed b = strip_and_compress(U("1 + x"));
  CHECK((b.shift == 0 && b.stride == 1 && b.core == U("1 + x")));
  const Compressed c = strip_and_compress(U("x^5"));
  CHECK((c.shift == 5 && c.stride == 1 && c.core == U("1")));
}

TEST_CASE("equiv_to_special examples") {
  CHECK(equiv_to_special(U("1 + x - 1/2*x^2")));
  CHECK(equiv_to_special(U("2 + 2*x^4 - x^8")));
  CHECK_FALSE(equiv_to_special(U("1 + x + x^2")));
  CHECK_FALSE(equiv_to_special(U("1 + x")));
}

TEST_CASE("equiv_to_special is invariant under the generators") {
  const Scalar lambdas[] = {make_scalar(2, 1), make_scalar(-1, 3), make_scalar(5, 2), make_scalar(-7, 4)};
  for (std::uint64_t n = 0; n < 200; ++n) {
    auto rng = test::rng_for(20, n);
    UniPoly f;
    if (n % 2 == 0) {
      // a + b x + c x^2 with b^2 = -2ac, scaled and shifted below.
      const Scalar a = random_scalar(rng);
      const Scalar b = random_scalar(rng);
      f = UniPoly::constant(a) + UniPoly::monomial(1, b) + UniPoly::monomial(2, -b * b / (2 * a));
    } else {
      f = random_unipoly(rng, 6, 2);
      if (f.coeff(0) == 0) f.add_term(0, 1);
    }
    const bool base = equiv_to_special(f);
    if (n % 2 == 0) CHECK(base);
    for (const Scalar& l : lambdas) {
      CHECK(equiv_to_special(l * f) == base);
      CHECK(equiv_to_special(scale_variable(f, l)) == base);
    }
    for (std::int64_t k = 2; k <= 4; ++k) CHECK(equiv_to_special(substitute_power(f, k)) == base);
    CHECK(equiv_to_special(reverse(f)) == base);
  }
}

TEST_CASE("kth_root_series examples") {
  CHECK(kth_root_series(U("1 + 2*y^3 + y^6"), 2, 6) == U("1 + y^3"));
  CHECK(kth_root_series(U("1 + 3*x - x^4"), 1, 3) == U("1 + 3*x"));
  CHECK(kth_root_series(U("1 + 2*x"), 2, 3) == U("1 + x - 1/2*x^2 + 1/2*x^3"));
  CHECK_THROWS_AS(kth_root_series(U("2 + x"), 2, 3), PreconditionError);
}

TEST_CASE("kth_root_series is a root modulo x^(prec+1)") {
  for (std::uint64_t n = 0; n < 80; ++n) {
    auto rng = test::rng_for(21, n);
    UniPoly f = random_unipoly(rng, 5, 1);
    f -= UniPoly::constant(f.coeff(0));
    f += UniPoly::constant(1);
    const std::int64_t k = 1 + static_cast<std::int64_t>(n % 5);
    const std::int64_t prec = 1 + static_cast<std::int64_t>(n % 7);
    const UniPoly u = kth_root_series(f, k, prec);
    CHECK(truncate(pow(u, static_cast<unsigned>(k)), prec) == truncate(f, prec));
  }
}

TEST_CASE("poly_kth_root examples") {
  const auto a = poly_kth_root(U("1 + 2*y^3 + y^6"), 2);
  REQUIRE(a.has_value());
  CHECK(a->mu == 1);
  CHECK(a->root == U("1 + y^3"));
  CHECK_FALSE(poly_kth_root(U("1 + 2*x + x^2 + x^3"), 2).has_value());
  const auto b = poly_kth_root(U("3*x^2 + 6*x^3 + 3*x^4"), 2);
  REQUIRE(b.has_value());
  CHECK(b->mu == 3);
  CHECK(b->root == U("x + x^2"));
  CHECK_FALSE(poly_kth_root(U("x^3 + x^4"), 2).has_value());
}

TEST_CASE("poly_kth_root round trip") {
  for (std::uint64_t n = 0; n < 100; ++n) {
    auto rng = test::rng_for(22, n);
    UniPoly r = random_unipoly(rng, 4, 1);
    r.add_term(0, 1 - r.coeff(0));
    const std::int64_t k = 2 + static_cast<std::int64_t>(n % 3);
    const std::int64_t shift = static_cast<std::int64_t>(n % 3);
    const Scalar mu = random_scalar(rng);
    const UniPoly f = mu * pow(r * UniPoly::monomial(shift), static_cast<unsigned>(k));
    const auto root = poly_kth_root(f, k);
    REQUIRE(root.has_value());
    CHECK(root->mu * pow(root->root, static_cast<unsigned>(k)) == f);
    // Whatever comes back from an arbitrary input must also multiply out.
    const UniPoly g = random_unipoly(rng, 8, 2);
    if (const auto other = poly_kth_root(g, k)) CHECK(other->mu * pow(other->root, static_cast<unsigned>(k)) == g);
  }
}

TEST_CASE("distinct_factor_count examples") {
  CHECK(distinct_factor_count(U("1 + x - 1/2*x^2")) == 2);
  CHECK(distinct_factor_count(U("(x - 1)^2*(x + 2)")) == 2);
  CHECK(distinct_factor_count(U("7")) == 0);
}

TEST_CASE("distinct_factor_count is additive on coprime products") {
  // Pairwise coprime building blocks with known counts.
  const std::vector<std::pair<UniPoly, std::int64_t>> blocks = {
      {U("x - 1"), 1},       {U("(x + 2)^2"), 1},       {U("x^2 + 1"), 2}, {U("(x - 3)^3"), 1},
      {U("x^2 - 2"), 2},     {U("(2*x + 1)^2"), 1},     {U("x"), 1},       {U("(x^2 + x + 1)^2"), 2},
  };
  for (std::uint64_t n = 0; n < 60; ++n) {
    auto rng = test::rng_for(23, n);
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (b == a) b = (b + 1) % blocks.size();
    const auto& [f, nf] = blocks[a];
    const auto& [g, ng] = blocks[b];
    CHECK(distinct_factor_count(f) == nf);
    CHECK(distinct_factor_count(f * g) == nf + ng);
  }
}

TEST_CASE("special and binomial polynomials are squarefree") {
  for (std::uint64_t n = 0; n < 100; ++n) {
    auto rng = test::rng_for(24, n);
    UniPoly f;
    if (n % 2 == 0) {
      const Scalar a = random_scalar(rng);
      const Scalar b = random_scalar(rng);
      f = UniPoly::constant(a) + UniPoly::monomial(1, b) + UniPoly::monomial(2, -b * b / (2 * a));
      f = substitute_power(f, 1 + static_cast<std::int64_t>(n % 3));
    } else {
      f = UniPoly::constant(random_scalar(rng)) + UniPoly::monomial(1 + static_cast<std::int64_t>(n % 9), random_scalar(rng));
    }
    REQUIRE(f.coeff(0) != 0);
    CHECK(gcd(f, derivative(f)).degree() == 0);
  }
}

TEST_CASE("power_support_check examples") {
  const PowerSupport a = power_support_check(U("1 + x + x^2"), 2);
  CHECK((a.t == 5 && !a.boundary_case));
  const PowerSupport b = power_support_check(U("1 + x - 1/2*x^2"), 2);
  CHECK((b.t == 4 && b.boundary_case));
  CHECK(pow(U("1 + x - 1/2*x^2"), 2) == U("1 + 2*x - x^3 + 1/4*x^4"));
  const PowerSupport c = power_support_check(U("1 + x + x^2"), 3);
  CHECK((c.t == 7 && !c.boundary_case));
  CHECK_THROWS_AS(power_support_check(U("1 + x"), 2), PreconditionError);
}

TEST_CASE("parallel and serial power scans agree with the dense count") {
  std::vector<UniPoly> fs;
  auto rng = test::rng_for(25, 0);
  for (int n = 0; n < 600; ++n) fs.push_back(random_unipoly(rng, 12, 3));
  for (std::int64_t k = 2; k <= 4; ++k) {
    const auto par = power_support_scan(fs, k);
    const auto ser = power_support_scan_serial(fs, k);
    REQUIRE(par.size() == fs.size());
    for (std::size_t n = 0; n < fs.size(); ++n) {
      CHECK(par[n].t_power == ser[n].t_power);
      CHECK(par[n].special == ser[n].special);
      CHECK(par[n].t_power == dense_power_tcount(fs[n], k));
    }
  }
}

TEST_CASE("power_tcount agrees with the dense count across the overflow fallback") {
  CHECK(power_tcount(U("1 + x - 1/2*x^2"), 2) == 4);
  CHECK(power_tcount(U("x^4 + x^8"), 3) == 4);
  CHECK(power_tcount(U("1 + x"), 0) == 1);
  const UniPoly big = U("1 + 3000000000*x + 5/7*x^3 - 4000000000000*x^5");
  for (std::int64_t k = 1; k <= 4; ++k) CHECK(power_tcount(big, k) == dense_power_tcount(big, k));
  for (std::uint64_t n = 0; n < 100; ++n) {
    auto rng = test::rng_for(26, n);
    const UniPoly f = random_unipoly(rng, 10, 2);
    const std::int64_t k = 1 + static_cast<std::int64_t>(n % 5);
    CHECK(power_tcount(f, k) == dense_power_tcount(f, k));
  }
}
