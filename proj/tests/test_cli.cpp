#include "doctest.h"

#include "qdyn/cli/parser.hpp"
#include "qdyn/cli/suites.hpp"
#include "qdyn/qea/algebra.hpp"
#include "qdyn/qea/roots.hpp"

using namespace qdyn;

TEST_CASE("scalar parsing") {
  RatFun q = RatFun::var(Sym::q);
  CHECK(parse_ratfun("q^2 - q^-2") == q * q - RatFun(1) / (q * q));
  CHECK(parse_ratfun("(1 + q)/(1 + q)") == RatFun(1));
  CHECK(parse_ratfun("-3/6") == RatFun(Rat(-1, 2)));
}

TEST_CASE("parse errors carry an offset") {
  CHECK_THROWS_AS(parse_ast(""), ParseError);
  CHECK_THROWS_AS(parse_ast("q +"), ParseError);
  CHECK_THROWS_AS(parse_ast("E(1,2"), ParseError);
  try {
    parse_ast("q ) 1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos == 2);
  }
}

TEST_CASE("algebra expressions") {
  Algebra alg(2);
  auto ev = [&](const char* s) { return evaluate(alg, parse_expr(s, 2)); };
  CHECK(ev("qbr(E(1,2), E(2,3); q)") == alg.E({1, 3}));
  CHECK(ev("E(1)") == alg.E({1, 2}));
  CHECK(ev("E(1,2)*F(1,2) - F(1,2)*E(1,2)") == alg.cartan_bracket({1, 2}));
  CHECK(ev("K(1,0)*K(-1,0)") == alg.one());
  CHECK_THROWS_AS(parse_expr("E(1,5)", 2), RankError);
  CHECK_THROWS_AS(parse_expr("K(1)", 2), RankError);
}

TEST_CASE("chart expressions") {
  auto p = parse_chart("zt1*om1 - t/lambda", 1);
  CHECK(p.str() == "zt1*om1 - t/lambda");
  CHECK(parse_chart("zt2^2", 2) == ChartPoly::zeta(2, 2, 2));
  CHECK_THROWS(parse_chart("zt3", 2));
}

TEST_CASE("suite registry") {
  CHECK(is_suite("all"));
  CHECK_FALSE(is_suite("nope"));
  SuiteOptions opt;
  opt.n = 2;
  auto rep = run_suite("twist", opt);
  CHECK(rep.ok());
  CHECK_FALSE(rep.checks.empty());
}
