#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "invol/oracle.hpp"

using namespace invol;

namespace {

std::string list(const std::vector<MultiIndex>& N) {
  std::string s;
  for (const auto& m : N) s += m.str() + " ";
  return s;
}

std::string span_text(const std::vector<MultiIndex>& N, const Division& d, std::uint64_t bound) {
  auto r = bruteforce_span(N, d, bound);
  return "involutive " + list(r.involutive) + "\nobstructions " + list(r.obstructions) + "\noutside " +
         list(r.outside) + "\noverlaps " + list(r.overlaps) + "\n";
}

template <class K>
std::string groebner_text(const Ring<K>& R, const std::vector<Poly<K>>& F) {
  std::string s;
  for (const auto& g : buchberger(R, F)) s += R.str(g) + "\n";
  return s;
}

/// Compares with fixtures/oracle/<name>.expected. INVOL_FREEZE=1 rewrites the file.
void frozen(const std::string& name, const std::string& got) {
  const std::string path = std::string(INVOL_SOURCE_DIR) + "/fixtures/oracle/" + name + ".expected";
  if (const char* f = std::getenv("INVOL_FREEZE"); f && std::string(f) == "1") {
    std::ofstream(path) << got;
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK_MESSAGE(ss.str() == got, name);
}

Ring<Rational> xyz(TermOrder o) { return Ring<Rational>(std::make_shared<Algebra>(Algebra::commutative(3)), std::move(o)); }

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("brute-force spans") {
    const std::vector<MultiIndex> N{{0, 2}, {2, 0}};
    auto r = bruteforce_span(N, Division::janet(), 5);
    CHECK(r.obstructions == std::vector<MultiIndex>{{2, 1}, {3, 1}, {4, 1}});
    CHECK(r.overlaps.empty());
    CHECK(r.involutive.size() + r.obstructions.size() + r.outside.size() == monomials_up_to_degree(2, 5).size());
    auto full = bruteforce_span({{0, 2}, {2, 0}, {2, 1}}, Division::janet(), 5);
    CHECK(full.obstructions.empty());
    CHECK(full.outside == r.outside);
  }

  TEST_CASE("Buchberger") {
    auto R = xyz(TermOrder::deginvlex(3));
    auto G = buchberger(R, {R.parse("z^2 - x*y"), R.parse("y*z - x"), R.parse("y^2 - z")});
    std::set<std::string> got;
    for (const auto& g : G) got.insert(R.str(R.monic(g)));
    std::set<std::string> want;
    for (const char* s : {"z^2 - x*y", "y*z - x", "y^2 - z", "z^3 - x^2"}) want.insert(R.str(R.monic(R.parse(s))));
    CHECK(got == want);
    auto U = buchberger(R, {R.parse("x"), R.parse("x + 1")});
    REQUIRE(U.size() == 1);
    CHECK(U[0] == R.one());
  }

  TEST_CASE("equivalence check detects a corrupted basis") {
    auto R = xyz(TermOrder::deginvlex(3));
    const std::vector<Poly<Rational>> F{R.parse("z^2 - x*y"), R.parse("y*z - x"), R.parse("y^2 - z")};
    CHECK(equivalence_check(R, F, Division::janet(), 1).agree);
    auto H = complete(R, F, Division::janet()).generators;
    H.pop_back();
    auto v = equivalence_check(R, F, Division::janet(), 1, 50, &H);
    CHECK_FALSE(v.agree);
    CHECK_FALSE(v.divergence.empty());
  }

  TEST_CASE("frozen oracle outputs") {
    frozen("span_janet_staircase", span_text({{0, 2}, {2, 0}}, Division::janet(), 6));
    frozen("span_pommaret_11", span_text({{1, 1}}, Division::pommaret(), 5));
    frozen("span_janet_3d", span_text({{0, 0, 2}, {0, 1, 1}, {1, 0, 1}}, Division::janet(), 4));
    {
      auto R = xyz(TermOrder::deginvlex(3));
      frozen("groebner_twisted_cubic",
             groebner_text(R, {R.parse("z^2 - x*y"), R.parse("y*z - x"), R.parse("y^2 - z")}));
    }
    {
      Ring<Rational> W(std::make_shared<Algebra>(Algebra::weyl(1)), TermOrder::degrevlex(2));
      frozen("groebner_weyl1", groebner_text(W, {W.parse("x*Dx - 2"), W.parse("Dx^2")}));
    }
    {
      auto R = xyz(TermOrder::lex(3));
      frozen("groebner_lex", groebner_text(R, {R.parse("x^2 + y*z - 1"), R.parse("x*y - z"), R.parse("z^2 - x")}));
    }
  }
}
