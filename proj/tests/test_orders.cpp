#include "doctest.h"

#include "invol/multiindex.hpp"
#include "invol/order.hpp"

using namespace invol;

TEST_SUITE("orders") {
  TEST_CASE("base kinds on small examples") {
    CHECK(TermOrder::lex(3).less({0, 2, 1}, {1, 0, 2}));
    CHECK(TermOrder::revlex(3).less({1, 0, 2}, {0, 2, 1}));
    CHECK(TermOrder::revlex(2).less({1, 0}, {0, 0}));
    CHECK(TermOrder::deglex(2).less({0, 1}, {2, 0}));
    CHECK(TermOrder::degrevlex(3).compare({1, 1, 0}, {1, 1, 0}) == 0);
  }

  TEST_CASE("monoid versus semigroup orders") {
    CHECK(TermOrder::degrevlex(3).is_monoid_order());
    CHECK(TermOrder::lex(3).is_monoid_order());
    CHECK_FALSE(TermOrder::revlex(3).is_monoid_order());
    CHECK_FALSE(parse_order({"weight", "-1", "-1", "1", "1", "refine", "degrevlex"}, 4).is_monoid_order());
    CHECK(parse_order({"weight", "1", "2", "refine", "lex"}, 2).is_monoid_order());
  }

  TEST_CASE("lifted orders") {
    const auto L = lift_order(TermOrder::revlex(2));
    CHECK(L.lifted());
    CHECK(L.dim() == 3);
    CHECK(L.is_monoid_order());
    CHECK(L.compare({1, 0, 0}, {0, 1, 0}) > 0);
    CHECK(L.compare({2, 0, 0}, {0, 0, 1}) > 0);
    const auto base = TermOrder::degrevlex(2);
    const auto H = lift_order(base);
    for (const auto& a : monomials_up_to_degree(2, 4))
      for (const auto& b : monomials_up_to_degree(2, 4))
        if (a.degree() == b.degree()) CHECK(H.compare(a.prepend(1), b.prepend(1)) == base.compare(a, b));
  }

  TEST_CASE("deginvlex reverses the variables") {
    const auto o = TermOrder::deginvlex(3);
    // z^2 - xy: xy leads under deginvlex, z^2 under degrevlex.
    CHECK(o.less({0, 0, 2}, {1, 1, 0}));
    CHECK(TermOrder::degrevlex(3).less({1, 1, 0}, {0, 0, 2}));
  }

  TEST_CASE("parsing and printing") {
    for (const char* text : {"degrevlex", "lex", "deglex perm 3 2 1", "weight -1 0 0 1 0 0 refine degrevlex"}) {
      std::vector<std::string> toks;
      std::string s = text, t;
      for (char c : s + " ") {
        if (c == ' ') {
          if (!t.empty()) toks.push_back(t);
          t.clear();
        } else {
          t += c;
        }
      }
      const std::size_t n = toks[0] == "weight" ? 6 : 3;
      const auto o = parse_order(toks, n);
      CHECK(o.str() == s);
      std::vector<std::string> again;
      std::string u;
      for (char c : o.str() + " ") {
        if (c == ' ') {
          if (!u.empty()) again.push_back(u);
          u.clear();
        } else {
          u += c;
        }
      }
      CHECK(parse_order(again, n) == o);
    }
    CHECK_THROWS(parse_order({"nonsense"}, 3));
    CHECK_THROWS(parse_order({"deglex", "perm", "1", "1", "2"}, 3));
  }

  TEST_CASE("total order and compatibility with addition") {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto all = monomials_up_to_degree(n, n == 3 ? 4 : 6);
      std::vector<TermOrder> orders{TermOrder::lex(n), TermOrder::revlex(n), TermOrder::deglex(n),
                                    TermOrder::degrevlex(n), TermOrder::deginvlex(n)};
      for (const auto& o : orders) {
        for (const auto& a : all)
          for (const auto& b : all) {
            const int c = o.compare(a, b);
            CHECK(c == -o.compare(b, a));
            CHECK((c == 0) == (a == b));
            for (std::size_t j = 0; j < n; ++j) {
              const auto e = MultiIndex::unit(n, j);
              CHECK(o.compare(a + e, b + e) == c);
            }
          }
      }
    }
  }

  TEST_CASE("transitivity on a sample") {
    const auto all = monomials_up_to_degree(3, 3);
    const auto o = TermOrder::degrevlex(3);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all)
          if (o.less(a, b) && o.less(b, c)) CHECK(o.less(a, c));
  }
}
