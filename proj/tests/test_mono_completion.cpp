#include "doctest.h"

#include <algorithm>
#include <random>

#include "invol/mono_completion.hpp"
#include "invol/oracle.hpp"

using namespace invol;

TEST_SUITE("mono_completion") {
  TEST_CASE("local obstructions") {
    CHECK(local_obstructions(Division::janet(), {{0, 2}, {2, 0}}) == std::vector<MultiIndex>{{2, 1}});
    CHECK(local_obstructions(Division::janet(), {{0, 2}, {2, 0}, {2, 1}}).empty());
    CHECK(local_obstructions(Division::pommaret(), {{1, 1}}) == std::vector<MultiIndex>{{1, 2}});
  }

  TEST_CASE("completion of the two-generator staircase") {
    for (const Division& d : {Division::janet(), Division::pommaret()}) {
      auto r = complete_monomial(d, {{0, 2}, {2, 0}});
      CHECK(r.generators == std::vector<MultiIndex>{{0, 2}, {2, 0}, {2, 1}});
      CHECK(r.added == std::vector<MultiIndex>{{2, 1}});
      CHECK(r.strength == Strength::Strong);
    }
    auto whole = complete_monomial(Division::janet(), {{0, 0}});
    CHECK(whole.generators == std::vector<MultiIndex>{{0, 0}});
    CHECK(whole.strength == Strength::Strong);
  }

  TEST_CASE("Pommaret completion of [1,1] hits the cap") {
    MonoCompletionOptions opt;
    opt.step_cap = 50;
    CHECK_THROWS_AS(complete_monomial(Division::pommaret(), {{1, 1}}, opt), StepCapExceeded);
  }

  TEST_CASE("Janet box completion") {
    auto box = janet_box_completion({{0, 2}, {2, 0}});
    std::sort(box.begin(), box.end(), MultiIndexKeyLess{});
    std::vector<MultiIndex> want{{0, 2}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
    std::sort(want.begin(), want.end(), MultiIndexKeyLess{});
    CHECK(box == want);
    CHECK(janet_box_completion({{1, 1}}) == std::vector<MultiIndex>{{1, 1}});
    for (const auto& g : complete_monomial(Division::janet(), {{0, 2}, {2, 0}}).generators)
      CHECK(std::find(box.begin(), box.end(), g) != box.end());
    CHECK(local_obstructions(Division::janet(), box).empty());
  }

  TEST_CASE("Pommaret bases of irreducible ideals") {
    auto a = pommaret_irreducible(2, {{2, 2}});
    CHECK(a.finite);
    CHECK(a.basis == std::vector<MultiIndex>{{0, 2}});
    CHECK_FALSE(pommaret_irreducible(2, {{1, 1}}).finite);
    auto c = pommaret_irreducible(1, {{3, 1}});
    CHECK(c.finite);
    CHECK(c.basis == std::vector<MultiIndex>{{3}});
    auto d = pommaret_irreducible(3, {{1, 2}, {2, 3}});
    REQUIRE(d.finite);
    CHECK(local_obstructions(Division::pommaret(), d.basis).empty());
    CHECK(minimal_monomial_basis(d.basis) == minimal_monomial_basis({{0, 1, 0}, {0, 0, 2}}));
    CHECK_THROWS(pommaret_irreducible(2, {{1, 2}, {1, 1}}));
  }

  TEST_CASE("Pommaret products and intersections") {
    CHECK(pommaret_product_basis({{1}}, {{1}}) == std::vector<MultiIndex>{{2}});
    auto p = pommaret_product_basis({{0, 1}}, {{0, 1}});
    CHECK(p == std::vector<MultiIndex>{{0, 2}});
    CHECK(local_obstructions(Division::pommaret(), p).empty());
    CHECK(pommaret_intersection_basis({{0, 1}}, {{0, 2}}) == std::vector<MultiIndex>{{0, 2}});
    CHECK_THROWS(pommaret_product_basis({{1, 1}}, {{0, 1}}));
  }

  TEST_CASE("completed sets decompose their span into disjoint cones") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 80; ++t) {
      const std::size_t n = 1 + t % 3;
      const auto pool = monomials_up_to_degree(n, 3);
      std::uniform_int_distribution<std::size_t> pick(1, pool.size() - 1);
      std::vector<MultiIndex> N;
      for (int k = 0; k < 3; ++k) {
        auto m = pool[pick(rng)];
        if (std::find(N.begin(), N.end(), m) == N.end()) N.push_back(m);
      }
      auto r = complete_monomial(Division::janet(), N);
      CHECK(r.strength == Strength::Strong);
      CHECK(minimal_monomial_basis(r.generators) == minimal_monomial_basis(N));
      auto span = bruteforce_span(r.generators, Division::janet(), 6);
      CHECK(span.obstructions.empty());
      CHECK(span.overlaps.empty());
      // Idempotent; as a set independent of input order and of the tie-break.
      auto sorted = [](std::vector<MultiIndex> v) {
        std::sort(v.begin(), v.end(), MultiIndexKeyLess{});
        return v;
      };
      CHECK(complete_monomial(Division::janet(), r.generators).generators == r.generators);
      auto shuffled = N;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(sorted(complete_monomial(Division::janet(), shuffled).generators) == sorted(r.generators));
      MonoCompletionOptions rev;
      rev.reverse_tie_break = true;
      CHECK(sorted(complete_monomial(Division::janet(), N, rev).generators) == sorted(r.generators));
      MonoCompletionOptions each;
      each.autoreduce_each_step = true;
      CHECK(sorted(complete_monomial(Division::janet(), N, each).generators) == sorted(r.generators));
    }
  }
}
