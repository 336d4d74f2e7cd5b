#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "weyl/commands.hpp"
#include "weyl/format.hpp"
#include "weyl/oracles.hpp"
#include "weyl/selftest.hpp"
#include "weyl/weyl_core.hpp"

using namespace weyl;
using weyl::test::U;
using weyl::test::W;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::string& line) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli_line(line, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse examples") {
  WeylElement r;
  r.add_term({1, 0}, 1);
  r.add_term({2, 3}, 2);
  r.add_term({3, 6}, 1);
  CHECK(parse_element("X + 2*X^2*Y^3 + X^3*Y^6") == r);
  CHECK(parse_element("Y*X") == W("X*Y + 1"));
  const WeylElement h = parse_element("3/2*X^2");
  CHECK(h.size() == 1);
  CHECK(h.coeff({2, 0}) == make_scalar(3, 2));
  CHECK(parse_element(" - ( Y - X ^ 3 ) ^ 2 ") == W("-(Y - X^3)^2"));
  CHECK(parse_element("-X^2") == WeylElement::monomial(2, 0, -1));
  CHECK(parse_element("2^3") == WeylElement::constant(8));
  CHECK(parse_element("Y*X - X*Y") == weyl_one());
  CHECK(parse_unipoly("1 + 2*y^3 + y^6") == U("1 + 2*z^3 + z^6"));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_element("X + * Y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_element("X^-1"), ParseError);
  CHECK_THROWS_AS(parse_element("X^99999"), ParseError);
  CHECK_THROWS_AS(parse_element("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_element("(X + Y"), ParseError);
  CHECK_THROWS_AS(parse_element("X Y"), ParseError);
  CHECK_THROWS_AS(parse_element("Z"), ParseError);
  CHECK_THROWS_AS(parse_element(""), ParseError);
  CHECK_THROWS_AS(parse_unipoly("x + y"), ParseError);
}

TEST_CASE("render examples") {
  CHECK(render(W("(X + Y)^2")) == "X^2 + 2*X*Y + Y^2 + 1");
  CHECK(render(WeylElement{}) == "0");
  CHECK(render(W("3/2*X^2")) == "3/2*X^2");
  CHECK(render(W("-X*Y - X^2*Y^4")) == "-X^2*Y^4 - X*Y");
  CHECK(render(psi(W("X + Y"))) == "x + y");
  CHECK(render(U("1 + 2*y^3 + y^6"), 'y') == "1 + 2*y^3 + y^6");
  CHECK(render(U("-1/2*x^2 + x")) == "x - 1/2*x^2");
}

TEST_CASE("render then parse is the identity") {
  for (std::uint64_t n = 0; n < 200; ++n) {
    auto rng = test::rng_for(40, n);
    const WeylElement p = random_element(rng, 6, 6);
    CHECK(parse_element(render(p)) == p);
    const UniPoly f = random_unipoly(rng, 9, 1);
    CHECK(parse_unipoly(render(f)) == f);
  }
}

TEST_CASE("command examples") {
  CHECK(cli("mass \"X + 2*X^2*Y^3 + X^3*Y^6\" --square").out == "5\n");
  CHECK(cli("bracket Y X").out == "1\n");
  const Run s = cli("screen Y X");
  CHECK(s.code == 0);
  CHECK(s.out.find("verdict: GENERATES_BY_COROLLARY") != std::string::npos);
  CHECK(cli("bracket-rs \"X + 2*X^2*Y^3 + X^3*Y^6\" \"-X*Y - X^2*Y^4\" --dir 3,-1").out ==
        "x^3*y^6 + 2*x^2*y^3 + x\n");
  CHECK(cli("st-en \"X + 2*X^2*Y^3 + X^3*Y^6\" --dir 3,-1").out == "st (1,0) en (3,6)\n");
  CHECK(cli("untwist \"(Y - X^3)^2 + X\"").out == "reduced: Y^2 + X\ntrace: [(3,1)]\n");
  CHECK(cli("find-f X*Y --dir 1,1 --bound 5").out == "none within bound 5\n");
  CHECK(cli("kth-root \"1 + 2*x\" 2 --prec 3").out == "1 + x - 1/2*x^2 + 1/2*x^3\n");
}

TEST_CASE("command errors map to exit codes") {
  const Run unknown = cli("frobnicate X");
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("unknown command") != std::string::npos);
  CHECK(cli("valuation X --dir 2,4").code == 1);
  CHECK(cli("valuation X").code == 1);
  CHECK(cli("normalize \"X^-1\"").code == 1);
  CHECK(cli("mul X").code == 1);
  CHECK(cli("fpoly X --dir -1,2").code == 1);
  CHECK(cli("--bogus-flag").code == 1);
  CHECK(cli("kth-root \"2 + x\" 2 --prec 2").code == 1);
  CHECK(cli("power-check \"1 + x - 1/2*x^2\" 2").code == 0);
}

TEST_CASE("JSON report schema and determinism") {
  CommandRequest req;
  req.name = "fpoly";
  req.args = {"X + 2*X^2*Y^3 + X^3*Y^6"};
  req.dir = "3,-1";
  const auto a = run_command(req);
  const auto b = run_command(req);
  CHECK(a.document.dump() == b.document.dump());
  std::vector<std::string> keys;
  for (const auto& [k, v] : a.document.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "result", "witnesses", "meta"});
  CHECK(a.document["meta"]["version"] == kToolVersion);
  CHECK(a.document["inputs"]["dir"] == nlohmann::ordered_json::array({3, -1}));
  CHECK(a.document["result"]["st"] == nlohmann::ordered_json::array({1, 0}));
  const auto& terms = a.document["result"]["f"]["terms"];
  REQUIRE(terms.size() == 3);
  CHECK(terms[1]["exp"] == 3);
  CHECK(terms[1]["coeff"] == "2");

  CommandRequest half;
  half.name = "normalize";
  half.args = {"3/2*X^2 - 1/3"};
  const auto h = run_command(half);
  CHECK(h.document["result"]["element"]["terms"][0]["coeff"] == "-1/3");
  CHECK(h.document["result"]["element"]["terms"][1]["exp"] == nlohmann::ordered_json::array({2, 0}));

  CommandRequest st;
  st.name = "selftest";
  st.seed = 5;
  st.cases = 20;
  const auto s1 = run_command(st);
  const auto s2 = run_command(st);
  CHECK(s1.document.dump() == s2.document.dump());
  CHECK(s1.document["meta"]["seed"] == 5);
  CHECK_FALSE(s1.failed);
}

TEST_CASE("rewriting oracle") {
  CHECK(rewrite_mul(W("Y^2"), W("X^2")) == W("X^2*Y^2 + 4*X*Y + 2"));
  CHECK(rewrite_mul(weyl_y(), weyl_x()) == W("X*Y + 1"));
  CHECK(dense_power_tcount(U("1 + x - 1/2*x^2"), 2) == 4);
  CHECK(brute_force_dirs(W("X + Y")) == dir_set(W("X + Y")));
}

TEST_CASE("the multiplication oracle catches a product without k!") {
  const MulFn mutant = [](const WeylElement& p, const WeylElement& q) {
    WeylElement out;
    for (const auto& [le, lc] : p.terms()) {
      for (const auto& [re, rc] : q.terms()) {
        for (Index k = 0; k <= std::min(le.j, re.i); ++k) {
          Integer w = 1;
          Integer cb;
          Integer cc;
          mpz_bin_uiui(cb.get_mpz_t(), static_cast<unsigned long>(le.j), static_cast<unsigned long>(k));
          mpz_bin_uiui(cc.get_mpz_t(), static_cast<unsigned long>(re.i), static_cast<unsigned long>(k));
          w = cb * cc;
          out.add_term({le.i + re.i - k, le.j + re.j - k}, lc * rc * Scalar(w));
        }
      }
    }
    return out;
  };
  const SuiteResult bad = multiplication_suite(0, 50, mutant);
  CHECK_FALSE(bad.passed());
  CHECK(bad.first_failure == "(Y^2) * (X^2)");
  CHECK(multiplication_suite(0, 50, normal_mul).passed());
}

TEST_CASE("oracle suite passes and is reproducible") {
  const SelftestSummary a = oracle_suite(0, 200);
  CHECK(a.all_passed());
  for (const auto& s : a.suites) CHECK_MESSAGE(s.passed(), s.name << ": " << s.first_failure);
  const SelftestSummary b = oracle_suite(0, 200);
  REQUIRE(a.suites.size() == b.suites.size());
  for (std::size_t n = 0; n < a.suites.size(); ++n) {
    CHECK(a.suites[n].failures == b.suites[n].failures);
    CHECK(a.suites[n].first_failure == b.suites[n].first_failure);
  }
}
