#include "doctest.h"

#include <random>

#include "invol/division.hpp"
#include "invol/mono_completion.hpp"

using namespace invol;

namespace {

std::string sets(const Division& d, const std::vector<MultiIndex>& N) {
  std::string s;
  for (auto m : multiplicative(d, N)) s += index_set_str(m, N[0].size());
  return s;
}

}  // namespace

TEST_SUITE("divisions") {
  TEST_CASE("Janet assignments") {
    CHECK(sets(Division::janet(), {{0, 2}, {2, 0}}) == "{1,2}{1}");
    CHECK(sets(Division::janet(), {{0, 2}, {2, 0}, {2, 1}}) == "{1,2}{1}{1}");
    CHECK(sets(Division::janet(), {{0, 0, 2}, {0, 1, 1}, {0, 2, 0}}) == "{1,2,3}{1,2}{1,2}");
  }

  TEST_CASE("Pommaret assignments") {
    CHECK(sets(Division::pommaret(), {{1, 1}}) == "{1}");
    CHECK(sets(Division::pommaret(), {{0, 2}, {0, 0}}) == "{1,2}{1,2}");
    CHECK(pommaret_multiplicative({0, 0, 3}) == all_indices(3));
  }

  TEST_CASE("lifted Janet: index 0 multiplicative iff the x0 entry is maximal") {
    const std::vector<MultiIndex> N{{1, 0, 1}, {0, 1, 1}};
    const auto M = multiplicative(Division::janet().lift(), N);
    CHECK(has_index(M[0], 0));
    CHECK_FALSE(has_index(M[1], 0));
    const auto base = multiplicative(Division::janet(), {{0, 1}, {1, 1}});
    CHECK((M[0] >> 1) == base[0]);
    CHECK((M[1] >> 1) == base[1]);
  }

  TEST_CASE("errors") {
    CHECK_THROWS(multiplicative(Division::janet(), {}));
    CHECK_THROWS(multiplicative(Division::janet(), {{1, 0}, {1, 0}}));
    CHECK_NOTHROW(multiplicative_multiset(Division::janet(), {{1, 0}, {1, 0}}));
    CHECK_THROWS(involutively_divides(Division::janet(), {{1, 0}}, {0, 1}, {1, 1}));
    CHECK_THROWS(parse_division("thomas"));
  }

  TEST_CASE("involutive divisibility") {
    const std::vector<MultiIndex> N{{0, 2}, {2, 0}};
    CHECK(involutively_divides(Division::janet(), N, {2, 0}, {4, 0}));
    CHECK_FALSE(involutively_divides(Division::janet(), N, {2, 0}, {2, 1}));
    CHECK_FALSE(involutively_divides(Division::pommaret(), {{1, 1}}, {1, 1}, {1, 2}));
  }

  TEST_CASE("involutive divisor") {
    const std::vector<MultiIndex> N{{0, 2}, {2, 0}, {2, 1}};
    CHECK(involutive_divisor(Division::janet(), N, {3, 2}) == std::optional<std::size_t>(0));
    CHECK(involutive_divisor(Division::janet(), N, {2, 1}) == std::optional<std::size_t>(2));
    CHECK_FALSE(involutive_divisor(Division::janet(), N, {1, 1}).has_value());
  }

  TEST_CASE("monomial autoreduction") {
    const std::vector<MultiIndex> N{{1, 0}, {1, 1}, {0, 2}};
    CHECK(autoreduce_monomial(Division::janet(), N) == N);
    CHECK(autoreduce_monomial(Division::pommaret(), {{0, 1}, {1, 1}}) == std::vector<MultiIndex>{{0, 1}});
    // [1,0] has class 1, so the second index is not multiplicative for it.
    CHECK(autoreduce_monomial(Division::pommaret(), {{1, 0}, {1, 1}}).size() == 2);
    CHECK(autoreduce_monomial(Division::pommaret(), {{0, 1}}) == std::vector<MultiIndex>{{0, 1}});
  }

  TEST_CASE("sweep and direct Janet assignments agree") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 1 + t % 4;
      const auto pool = monomials_up_to_degree(n, 4);
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::vector<MultiIndex> N;
      for (int k = 0; k < 6; ++k) {
        auto m = pool[pick(rng)];
        if (std::find(N.begin(), N.end(), m) == N.end()) N.push_back(m);
      }
      CHECK(janet_multiplicative_sweep(N) == janet_multiplicative_direct(N));
    }
  }

  TEST_CASE("involutive cones of a Janet set meet only when nested, up to degree 8") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + t % 3;
      const auto pool = monomials_up_to_degree(n, 4);
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::vector<MultiIndex> N;
      for (int k = 0; k < 6; ++k) {
        auto m = pool[pick(rng)];
        if (std::find(N.begin(), N.end(), m) == N.end()) N.push_back(m);
      }
      const auto M = multiplicative(Division::janet(), N);
      for (const auto& mu : monomials_up_to_degree(n, 8)) {
        std::vector<std::size_t> hits;
        for (std::size_t k = 0; k < N.size(); ++k)
          if (involutively_divides(N[k], M[k], mu)) hits.push_back(k);
        for (std::size_t a = 0; a < hits.size(); ++a)
          for (std::size_t b = a + 1; b < hits.size(); ++b) {
            const auto& p = N[hits[a]];
            const auto& q = N[hits[b]];
            CHECK((involutively_divides(p, M[hits[a]], q) || involutively_divides(q, M[hits[b]], p)));
          }
      }
    }
  }

  TEST_CASE("removing an element never removes multiplicative indices") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + t % 3;
      const auto pool = monomials_up_to_degree(n, 4);
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::vector<MultiIndex> N;
      for (int k = 0; k < 6; ++k) {
        auto m = pool[pick(rng)];
        if (std::find(N.begin(), N.end(), m) == N.end()) N.push_back(m);
      }
      if (N.size() < 2) continue;
      const auto M = multiplicative(Division::janet(), N);
      for (std::size_t drop = 0; drop < N.size(); ++drop) {
        std::vector<MultiIndex> sub;
        std::vector<IndexSet> old;
        for (std::size_t k = 0; k < N.size(); ++k)
          if (k != drop) {
            sub.push_back(N[k]);
            old.push_back(M[k]);
          }
        const auto Ms = multiplicative(Division::janet(), sub);
        for (std::size_t k = 0; k < sub.size(); ++k) CHECK((old[k] & ~Ms[k]) == 0);
      }
    }
  }
}
