#include <doctest.h>

#include "helpers.hpp"
#include "weyl/format.hpp"
#include "weyl/oracles.hpp"
#include "weyl/support_geometry.hpp"
#include "weyl/weyl_core.hpp"

using namespace weyl;
using weyl::test::C;
using weyl::test::W;

TEST_CASE("normal_mul examples") {
  CHECK(normal_mul(weyl_y(), weyl_x()) == W("X*Y + 1"));
  CHECK(normal_mul(W("Y^2"), W("X^2")) == W("X^2*Y^2 + 4*X*Y + 2"));
  CHECK(normal_mul(weyl_x(), weyl_y()) == WeylElement::monomial(1, 1));
  CHECK(normal_mul(WeylElement{}, W("X + Y")).is_zero());
}

TEST_CASE("bracket examples") {
  CHECK(bracket(weyl_y(), weyl_x()) == weyl_one());
  const WeylElement p = W("X^3*Y + 2*Y^2 - X");
  CHECK(bracket(p, p).is_zero());
  CHECK(bracket(weyl_y(), W("X^2")) == W("2*X"));
  CHECK(bracket(WeylElement{}, p).is_zero());
}

TEST_CASE("pow examples") {
  const WeylElement p = W("X + Y");
  CHECK(pow(p, 2) == W("X^2 + 2*X*Y + Y^2 + 1"));
  CHECK(pow(p, 0) == weyl_one());
  CHECK(pow(p, 1) == p);
  CHECK(pow(p, 5) == normal_mul(pow(p, 2), pow(p, 3)));
}

TEST_CASE("psi examples") {
  CHECK(psi(W("X*Y + 1")) == C("X*Y + 1"));
  const WeylElement r = W("X + 2*X^2*Y^3 + X^3*Y^6");
  CHECK(psi(r) == C("X + 2*X^2*Y^3 + X^3*Y^6"));
  CHECK(psi_inv(psi(r)) == r);
  for (Index i = 0; i < 5; ++i) {
    for (Index j = 0; j < 5; ++j) {
      const WeylElement m = WeylElement::monomial(i, j, make_scalar(i + 1, j + 2));
      CHECK(psi_inv(psi(m)) == m);
      CHECK(psi(m).coeff({i, j}) == m.coeff({i, j}));
    }
  }
}

TEST_CASE("automorphism examples") {
  CHECK(apply_tau(weyl_x()) == weyl_y());
  CHECK(apply_tau(weyl_y()) == W("-X"));
  CHECK(apply_tau(W("X*Y")) == W("-X*Y - 1"));
  CHECK(apply_phi(weyl_y(), 1, 3) == W("Y + X^3"));
  CHECK(apply_phi(W("(Y - X^3)^2 + X"), 1, 3) == W("Y^2 + X"));
  CHECK_THROWS_AS(apply_phi(weyl_y(), 1, 0), PreconditionError);
}

TEST_CASE("matrix_rep examples") {
  const std::size_t n = 6;
  const ScalarMatrix one = matrix_rep(bracket(weyl_y(), weyl_x()), n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r <= n; ++r) CHECK(one(r, c) == (r == c ? 1 : 0));
  }
  const ScalarMatrix x = matrix_rep(weyl_x(), 2);
  CHECK(x(1, 0) == 1);
  CHECK(x(2, 1) == 1);
  for (std::size_t r = 0; r <= 2; ++r) CHECK(x(r, 2) == 0);
  const ScalarMatrix y = matrix_rep(weyl_y(), 3);
  CHECK(y(1, 2) == 2);
  CHECK(y(2, 3) == 3);
}

TEST_CASE("defining relation and associativity on random triples") {
  CHECK(normal_mul(weyl_y(), weyl_x()) - normal_mul(weyl_x(), weyl_y()) == weyl_one());
  for (std::uint64_t n = 0; n < 60; ++n) {
    auto rng = test::rng_for(1, n);
    const WeylElement p = random_element(rng, 5, 4);
    const WeylElement q = random_element(rng, 5, 4);
    const WeylElement s = random_element(rng, 5, 4);
    CHECK(normal_mul(normal_mul(p, q), s) == normal_mul(p, normal_mul(q, s)));
    CHECK(normal_mul(p, q + s) == normal_mul(p, q) + normal_mul(p, s));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (std::uint64_t n = 0; n < 12; ++n) {
    auto rng = test::rng_for(2, n);
    const WeylElement p = random_element(rng, 14, 60);
    const WeylElement q = random_element(rng, 14, 60);
    CHECK(normal_mul_parallel(p, q) == normal_mul_serial(p, q));
  }
  // Large enough that normal_mul dispatches to the parallel kernel.
  auto rng = test::rng_for(2, 99);
  const WeylElement p = random_element(rng, 20, 90);
  const WeylElement q = random_element(rng, 20, 90);
  CHECK(normal_mul(p, q) == normal_mul_serial(p, q));
}

TEST_CASE("closed form agrees with rewriting and with the representation") {
  for (std::uint64_t n = 0; n < 40; ++n) {
    auto rng = test::rng_for(3, n);
    const WeylElement p = random_element(rng, 6, 4);
    const WeylElement q = random_element(rng, 6, 4);
    const WeylElement pq = normal_mul(p, q);
    CHECK(pq == rewrite_mul(p, q));
    CHECK(representation_agrees(p, q, pq));
  }
}

TEST_CASE("tau and phi preserve brackets") {
  for (std::uint64_t n = 0; n < 40; ++n) {
    auto rng = test::rng_for(4, n);
    const WeylElement p = random_element(rng, 4, 4);
    const WeylElement q = random_element(rng, 4, 4);
    const Scalar mu = random_scalar(rng);
    const Index sigma = 1 + static_cast<Index>(n % 4);
    CHECK(bracket(apply_tau(p), apply_tau(q)) == apply_tau(bracket(p, q)));
    CHECK(bracket(apply_phi(p, mu, sigma), apply_phi(q, mu, sigma)) == apply_phi(bracket(p, q), mu, sigma));
    CHECK(mass(apply_tau(p)) == mass(p));
  }
}

TEST_CASE("leading terms are multiplicative for rho + sigma > 0") {
  for (std::uint64_t n = 0; n < 80; ++n) {
    auto rng = test::rng_for(5, n);
    const WeylElement p = random_element(rng, 5, 5);
    const WeylElement q = random_element(rng, 5, 5);
    const Direction d = random_positive_direction(rng, 5);
    CHECK(leading(normal_mul(p, q), d) == comm_product(leading(p, d), leading(q, d)));
  }
}
