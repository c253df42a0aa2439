#include "doctest.h"

#include "invol/multiindex.hpp"

using namespace invol;

TEST_SUITE("multiindex") {
  TEST_CASE("componentwise addition") {
    CHECK(add({0, 2}, {2, 0}) == MultiIndex{2, 2});
    CHECK(add({1, 1}, {0, 0}) == MultiIndex{1, 1});
    CHECK(MultiIndex{2, 0} + MultiIndex::unit(2, 1) == MultiIndex{2, 1});
    CHECK_THROWS_AS(add({1, 0}, {1, 0, 0}), DimensionError);
  }

  TEST_CASE("divisibility") {
    CHECK(divides({0, 2}, {1, 3}));
    CHECK_FALSE(divides({2, 0}, {1, 3}));
    CHECK_FALSE(divides({0, 2}, {2, 1}));
    CHECK_THROWS_AS(divides({0, 2}, {2, 1, 0}), DimensionError);
  }

  TEST_CASE("class of a multi index") {
    CHECK(MultiIndex{1, 1}.cls() == std::optional<std::size_t>(0));
    CHECK(MultiIndex{0, 2}.cls() == std::optional<std::size_t>(1));
    CHECK_FALSE(MultiIndex{0, 0}.cls().has_value());
  }

  TEST_CASE("lcm and degree") {
    CHECK(lcm({0, 2}, {2, 0}) == MultiIndex{2, 2});
    CHECK(lcm(std::vector<MultiIndex>{{0, 2}, {2, 0}}) == MultiIndex{2, 2});
    CHECK(degree({2, 1}) == 3);
    CHECK(MultiIndex{2, 1}.degree() == 3);
  }

  TEST_CASE("text form round trip") {
    CHECK(MultiIndex{3, 0, 1}.str() == "[3,0,1]");
    CHECK(parse_multiindex("[3,0,1]") == MultiIndex{3, 0, 1});
    CHECK(parse_multiindex(" [ 2 , 5 ] ") == MultiIndex{2, 5});
    CHECK_THROWS(parse_multiindex("[1,-2]"));
    CHECK_THROWS(parse_multiindex("1,2"));
  }

  TEST_CASE("enumeration") {
    CHECK(monomials_of_degree(2, 3).size() == 4);
    CHECK(monomials_up_to_degree(3, 2).size() == 10);
  }

  TEST_CASE("divisibility laws on all small indices") {
    const auto all = monomials_up_to_degree(3, 3);
    for (const auto& a : all) {
      CHECK(divides(a, a));
      // Raising entries at or after the class keeps the class.
      if (!a.is_zero())
        for (std::size_t j = *a.cls(); j < 3; ++j) CHECK((a + MultiIndex::unit(3, j)).cls() == a.cls());
      for (const auto& b : all) {
        CHECK(divides(a, a + b));
        if (divides(a, b) && divides(b, a)) CHECK(a == b);
        for (const auto& c : all)
          if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
      }
    }
  }
}
