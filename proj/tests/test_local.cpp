#include "doctest.h"

#include <memory>
#include <set>

#include "invol/local.hpp"

using namespace invol;

namespace {

Ring<Rational> local2() {
  return Ring<Rational>(std::make_shared<Algebra>(Algebra::commutative(2)),
                        parse_order({"weight", "-1", "-1", "refine", "degrevlex"}, 2));
}

std::multiset<std::string> strs(const Ring<Rational>& R, const std::vector<Poly<Rational>>& G) {
  std::multiset<std::string> s;
  for (const auto& g : G) s.insert(R.str(R.monic(g)));
  return s;
}

}  // namespace

TEST_SUITE("local") {
  TEST_CASE("ecart") {
    auto R = local2();
    CHECK(ecart(R.parse("x - x^2")) == 1);
    CHECK(ecart(R.parse("1 + x + y^3")) == 3);
    CHECK(ecart(R.parse("x*y")) == 0);
    CHECK_THROWS(ecart(R.zero()));
  }

  TEST_CASE("Mora normal form divides by a unit") {
    auto R = local2();
    const std::vector<Poly<Rational>> G{R.parse("x - x^2")};
    const auto f = R.parse("x");
    auto m = mora_normal_form(R, f, G, Division::janet());
    CHECK(m.remainder.is_zero());
    CHECK(m.unit == R.parse("1 - x"));
    CHECK(verify_mora(R, f, G, m));
  }

  TEST_CASE("restricted reducers fall back to ordinary divisibility") {
    // Purely involutive reduction cycles on this input: every intermediate
    // reducer inherits the index set {x} and the y-degree grows forever.
    auto R = local2();
    const std::vector<Poly<Rational>> G{R.parse("-2*x + y^2 - 2*x*y"), R.parse("3*y - 3*y^2 - 2*x*y")};
    const auto f = R.parse("-5*y^2 - x^2 + 3*x*y^2");
    const auto mult = multiplicative_multiset(Division::janet(), detail::leading_exponents(G));
    auto m = mora_normal_form(R, f, G, Division::janet(), &mult);
    CHECK_FALSE(m.involutive);
    CHECK(verify_mora(R, f, G, m));
  }

  TEST_CASE("global orders give a trivial unit") {
    Ring<Rational> R(std::make_shared<Algebra>(Algebra::commutative(2)), TermOrder::degrevlex(2));
    const std::vector<Poly<Rational>> G{R.parse("x^2 - y"), R.parse("y^2")};
    const auto f = R.parse("x^3*y + x + 1");
    auto m = mora_normal_form(R, f, G, Division::janet());
    CHECK(m.unit == R.one());
    CHECK(m.involutive);
    CHECK(verify_mora(R, f, G, m, nullptr));
  }

  TEST_CASE("local completion") {
    auto R = local2();
    auto B = complete_local(R, {R.parse("x - x^2"), R.parse("y + x*y")}, Division::janet());
    // x - x^2 and x differ by a unit of the localisation; the basis stays polynomial.
    std::multiset<std::string> le;
    for (const auto& g : B.generators) le.insert(R.mono_str(g.le()));
    CHECK(le == std::multiset<std::string>{"x", "y"});
    for (const auto& g : B.generators) CHECK(g.lc() == 1);
    auto U = complete_local(R, {R.parse("1 + x")}, Division::janet());
    REQUIRE(U.generators.size() == 1);
    CHECK(U.generators[0] == R.one());
  }

  TEST_CASE("Weyl algebra: localisation and homogenisation") {
    auto alg = std::make_shared<Algebra>(Algebra::weyl(3));
    Ring<Rational> R(alg, parse_order({"weight", "-1", "0", "0", "1", "0", "0", "refine", "degrevlex"}, 6));
    const std::vector<Poly<Rational>> F{R.parse("Dz - y*Dx"), R.parse("Dy")};
    auto M = complete_local(R, F, Division::janet());
    CHECK(strs(R, M.generators) == std::multiset<std::string>{"Dx", "Dy", "Dz"});
    auto H = complete_via_homogenization(R, F, Division::janet());
    CHECK(H.homogeneous_size == 21);
    CHECK(H.generators.size() == 9);
    CHECK(H.strength == Strength::Weak);
    HomogenizationOptions o;
    o.strong_janet = true;
    auto S = complete_via_homogenization(R, F, Division::janet(), {}, o);
    CHECK(S.generators.size() == 7);
    o.strong_janet = true;
    CHECK_THROWS(complete_via_homogenization(R, F, Division::pommaret(), {}, o));
  }

  TEST_CASE("Pommaret needs the subring property unless iterated reduction is allowed") {
    auto alg = std::make_shared<Algebra>(Algebra::q_heisenberg(mpq_class(2)));
    Ring<Rational> R(alg, parse_order({"weight", "-1", "-1", "-1", "refine", "degrevlex"}, 3));
    const std::vector<Poly<Rational>> G{R.parse("delta - delta^2")};
    CHECK_THROWS(mora_normal_form(R, R.parse("delta"), G, Division::pommaret()));
    CHECK_THROWS(mora_normal_form(R, R.parse("delta"), G, Division::janet()));
    MoraOptions opt;
    opt.allow_iterated = true;
    auto m = mora_normal_form(R, R.parse("delta"), G, Division::pommaret(), nullptr, opt);
    CHECK(verify_mora(R, R.parse("delta"), G, m));
    CHECK_THROWS(mora_normal_form(R, R.parse("delta"), G, Division::janet(), nullptr, opt));
  }

  TEST_CASE("Pommaret Mora collapses to the unit ideal") {
    auto alg = std::make_shared<Algebra>(Algebra::weyl(2));
    Ring<Rational> R(alg, parse_order({"weight", "-1", "-1", "1", "1", "refine", "degrevlex"}, 4));
    auto B = complete_local(R, {R.parse("1 + x + y"), R.parse("Dy - Dx")}, Division::pommaret());
    REQUIRE(B.generators.size() == 1);
    CHECK(B.generators[0] == R.one());
  }
}
