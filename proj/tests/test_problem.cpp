#include "doctest.h"

#include "invol/problem.hpp"

using namespace invol;

namespace {

const char* kExample =
    "algebra commutative 3\n"
    "vars x y z\n"
    "order deginvlex\n"
    "division janet\n"
    "generators:\n"
    "  z^2 - x*y\n"
    "  y*z - x\n"
    "  y^2 - z\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse and print round trip") {
    const Problem p = parse_problem(kExample);
    CHECK(p.algebra == std::vector<std::string>{"commutative", "3"});
    CHECK(p.order == std::vector<std::string>{"deginvlex"});
    CHECK(p.generators.size() == 3);
    CHECK(p.generators[1].line == 7);
    const std::string text = print_problem(p);
    const Problem q = parse_problem(text);
    CHECK(print_problem(q) == text);
    CHECK(q.generators.size() == 3);
  }

  TEST_CASE("comments, targets and multi-index generators") {
    const Problem p = parse_problem(
        "# monomial input\nalgebra commutative 2\ndivision pommaret\ngenerators:\n  [0,2]\n  [2,0]\n");
    CHECK(p.division == "pommaret");
    REQUIRE(p.generators.size() == 2);
    CHECK(is_multiindex_line(p.generators[0]));
    const Problem t = parse_problem("algebra weyl 1\ntarget: Dx*x\ngenerators:\n  Dx\n");
    REQUIRE(t.target.has_value());
    CHECK_FALSE(is_multiindex_line(t.generators[0]));
  }

  TEST_CASE("syntax errors carry line and column") {
    try {
      parse_problem("algebra commutative 2\ngenerators:\n  x + * y\n");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 1);
    }
    CHECK_THROWS_AS(parse_problem("algebra commutative 2\nflavour sweet\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("vars x y\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("algebra commutative 2\ncoeff real\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("algebra commutative 2\ngenerators:\n  x + w\n"), ParseError);
  }

  TEST_CASE("semantic errors") {
    CHECK_THROWS_AS(parse_problem("algebra enveloping so3\norder lex\ngenerators:\n  x1\n"), ProblemError);
    CHECK_THROWS(parse_problem("algebra sedenion 4\n"));
    CHECK_THROWS(parse_problem("algebra commutative 2\norder weight 1\n"));
    CHECK_NOTHROW(parse_problem("algebra enveloping so3\norder degrevlex\ngenerators:\n  x1\n"));
  }

  TEST_CASE("variable renaming") {
    const Problem p = parse_problem("algebra commutative 2\nvars s t\ngenerators:\n  s*t - 1\n");
    auto alg = build_algebra(p);
    CHECK(alg->names() == std::vector<std::string>{"s", "t"});
    CHECK_THROWS(parse_problem("algebra commutative 2\nvars s\n"));
  }
}
