// Seeded property checks shared by the property suites and the acceptance binary.
#ifndef INVOL_TESTS_PROPERTY_CHECKS_HPP
#define INVOL_TESTS_PROPERTY_CHECKS_HPP

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "invol/local.hpp"
#include "invol/oracle.hpp"
#include "invol/validate.hpp"

namespace invol::props {

struct Outcome {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
  bool ok() const { return failures == 0; }
  std::string str() const {
    return "trials=" + std::to_string(trials) + " failures=" + std::to_string(failures) +
           (first_failure.empty() ? "" : " first=" + first_failure);
  }
};

inline std::string set_str(const std::vector<MultiIndex>& N) {
  std::string s = "{";
  for (std::size_t i = 0; i < N.size(); ++i) s += (i ? "," : "") + N[i].str();
  return s + "}";
}

inline std::vector<MultiIndex> random_multi_set(std::mt19937_64& rng, std::size_t n, std::size_t max_size,
                                                std::uint64_t max_degree) {
  const auto pool = monomials_up_to_degree(n, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::set<MultiIndex, MultiIndexKeyLess> s;
  const std::size_t k = size(rng);
  while (s.size() < std::min(k, pool.size())) s.insert(pool[pick(rng)]);
  return {s.begin(), s.end()};
}

/// True when C(nu) with multiplicative set `a` meets C(mu) with `b`.
inline bool cones_meet(const MultiIndex& nu, IndexSet a, const MultiIndex& mu, IndexSet b) {
  const MultiIndex l = lcm(nu, mu);
  return involutively_divides(nu, a, l) && involutively_divides(mu, b, l);
}

inline bool cone_inside(const MultiIndex& inner, IndexSet a, const MultiIndex& outer, IndexSet b) {
  return involutively_divides(outer, b, inner) && (a & ~b) == 0;
}

/// Nesting, filtration and continuity of both divisions on random sets.
inline Outcome division_axioms(std::uint64_t seed, std::size_t trials) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 1 + t % 3;
    auto N = random_multi_set(rng, n, 5, 3);
    for (const Division& d : {Division::janet(), Division::pommaret()}) {
      ++out.trials;
      const std::string tag = d.str() + " " + set_str(N);
      const auto M = multiplicative(d, N);
      for (std::size_t a = 0; a < N.size(); ++a)
        for (std::size_t b = a + 1; b < N.size(); ++b)
          if (cones_meet(N[a], M[a], N[b], M[b]) && !cone_inside(N[a], M[a], N[b], M[b]) &&
              !cone_inside(N[b], M[b], N[a], M[a]))
            out.fail("nesting " + tag);
      // Filtration on a random subset containing each element.
      std::bernoulli_distribution keep(0.5);
      std::vector<MultiIndex> sub;
      std::vector<std::size_t> where;
      for (std::size_t a = 0; a < N.size(); ++a)
        if (keep(rng)) {
          sub.push_back(N[a]);
          where.push_back(a);
        }
      if (!sub.empty()) {
        const auto Ms = multiplicative(d, sub);
        for (std::size_t k = 0; k < sub.size(); ++k)
          if ((M[where[k]] & ~Ms[k]) != 0) out.fail("filtration " + tag + " sub " + set_str(sub));
      }
      // Continuity: the prolongation/divisor graph has no cycle.
      std::vector<std::vector<std::size_t>> edges(N.size());
      for (std::size_t a = 0; a < N.size(); ++a)
        for (std::size_t j = 0; j < n; ++j) {
          if (has_index(M[a], j)) continue;
          const MultiIndex p = N[a] + MultiIndex::unit(n, j);
          for (std::size_t b = 0; b < N.size(); ++b)
            if (involutively_divides(N[b], M[b], p)) edges[a].push_back(b);
        }
      std::vector<int> colour(N.size(), 0);
      bool cycle = false;
      std::function<void(std::size_t)> dfs = [&](std::size_t v) {
        colour[v] = 1;
        for (auto w : edges[v]) {
          if (colour[w] == 1) cycle = true;
          if (colour[w] == 0) dfs(w);
        }
        colour[v] = 2;
      };
      for (std::size_t v = 0; v < N.size(); ++v)
        if (colour[v] == 0) dfs(v);
      if (cycle) out.fail("continuity " + tag);
    }
  }
  return out;
}

/// Commutative ring in three variables or the first Weyl algebra.
inline Ring<Rational> sample_ring(std::size_t t) {
  if (t % 2 == 0) return Ring<Rational>(std::make_shared<Algebra>(Algebra::commutative(3)), TermOrder::degrevlex(3));
  return Ring<Rational>(std::make_shared<Algebra>(Algebra::weyl(1)), TermOrder::degrevlex(2));
}

inline std::vector<Poly<Rational>> random_generators(const Ring<Rational>& R, std::mt19937_64& rng,
                                                     std::uint64_t max_degree, std::size_t count) {
  std::vector<Poly<Rational>> F;
  std::uniform_int_distribution<std::size_t> terms(1, 3);
  while (F.size() < count) {
    auto f = random_polynomial(R, rng, max_degree, terms(rng), 3);
    if (!f.is_zero() && f.le().degree() > 0) F.push_back(f);
  }
  return F;
}

/// Involutive normal form with the reducible term and the divisor picked at random.
inline Poly<Rational> shuffled_normal_form(const Ring<Rational>& R, Poly<Rational> h,
                                           const std::vector<Poly<Rational>>& H, const std::vector<IndexSet>& mult,
                                           std::mt19937_64& rng) {
  using T = CoeffTraits<Rational>;
  for (std::size_t step = 0; step < 100000; ++step) {
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    for (std::size_t i = 0; i < h.terms.size(); ++i)
      for (std::size_t k = 0; k < H.size(); ++k)
        if (involutively_divides(H[k].le(), mult[k], h.terms[i].e)) moves.push_back({i, k});
    if (moves.empty()) return h;
    auto [i, k] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    const auto term = h.terms[i];
    Poly<Rational> p = R.mul_term(T::one(), term.e - H[k].le(), H[k]);
    h = R.sub(h, R.scale(term.c / p.lc(), p));
  }
  throw StepCapExceeded("shuffled normal form did not terminate");
}

/// Uniqueness of the involutive normal form, agreement with the ordinary
/// normal form on completed bases, and the reconstruction identity.
inline Outcome reduction_props(std::uint64_t seed, std::size_t trials) {
  Outcome out;
  std::mt19937_64 rng(seed);
  const Division d = Division::janet();
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    const auto R = sample_ring(t);
    auto F = random_generators(R, rng, 2, 2);
    auto H = involutive_head_autoreduce(R, F, d);
    const auto mult = multiplicative_multiset(d, detail::leading_exponents(H));
    auto f = random_polynomial(R, rng, 3, 4);
    auto rep = involutive_normal_form(R, f, H, d, NFMode::Full, &mult);
    if (!verify_representation(R, f, H, rep, &mult)) out.fail("reconstruction " + R.str(f));
    for (int s = 0; s < 3; ++s) {
      auto g = shuffled_normal_form(R, f, H, mult, rng);
      if (g != rep.remainder) out.fail("shuffle " + R.str(f) + ": " + R.str(g) + " vs " + R.str(rep.remainder));
    }
    auto B = complete(R, F, d);
    auto p = R.add(random_member(R, F, rng, 1), random_polynomial(R, rng, 2, 2));
    auto a = involutive_normal_form(R, p, B.generators, d, NFMode::Full, &B.multiplicative).remainder;
    auto b = ordinary_normal_form(R, p, B.generators).remainder;
    if (a != b) out.fail("ordinary vs involutive " + R.str(p));
  }
  return out;
}

/// Involutive completion against Buchberger on random ideals.
inline Outcome oracle_agreement(std::uint64_t seed, std::size_t trials) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> count(1, 3);
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    const auto R = sample_ring(t);
    auto F = random_generators(R, rng, 3, count(rng));
    auto v = equivalence_check(R, F, Division::janet(), seed + t, 10);
    if (!v.agree) out.fail(v.divergence);
  }
  return out;
}

inline std::vector<std::pair<std::string, std::shared_ptr<Algebra>>> builtin_algebras() {
  return {{"commutative 3", std::make_shared<Algebra>(Algebra::commutative(3))},
          {"weyl 1", std::make_shared<Algebra>(Algebra::weyl(1))},
          {"weyl 2", std::make_shared<Algebra>(Algebra::weyl(2))},
          {"ore-shift 1", std::make_shared<Algebra>(Algebra::ore_shift(1))},
          {"ore-difference 1", std::make_shared<Algebra>(Algebra::ore_difference(1))},
          {"enveloping so3", std::make_shared<Algebra>(Algebra::so3())},
          {"qheisenberg 2", std::make_shared<Algebra>(Algebra::q_heisenberg(mpq_class(2)))}};
}

/// Product compatibility and associativity for every built-in algebra up to degree 4.
inline Outcome algebra_axioms(std::uint64_t seed, std::size_t trials) {
  Outcome out;
  for (const auto& [name, alg] : builtin_algebras()) {
    for (const auto& ord : {TermOrder::degrevlex(alg->dim()), TermOrder::deglex(alg->dim())}) {
      ++out.trials;
      auto rep = validate(alg, ord, 4, seed, trials);
      if (!rep.ok()) out.fail(name + " " + ord.str() + ": " + rep.str());
    }
  }
  return out;
}

/// Mora normal forms satisfy u*f - r = sum P_g * g with le(u) = 0.
inline Outcome local_props(std::uint64_t seed, std::size_t trials) {
  Outcome out;
  std::mt19937_64 rng(seed);
  Ring<Rational> C(std::make_shared<Algebra>(Algebra::commutative(2)), parse_order({"weight", "-1", "-1", "refine", "degrevlex"}, 2));
  Ring<Rational> W(std::make_shared<Algebra>(Algebra::weyl(1)), parse_order({"weight", "-1", "1", "refine", "degrevlex"}, 2));
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    const Ring<Rational>& R = t % 2 == 0 ? C : W;
    const Division d = t % 4 < 2 ? Division::janet() : Division::pommaret();
    auto G = random_generators(R, rng, 2, 2);
    auto f = random_polynomial(R, rng, 3, 3);
    try {
      const auto mult = multiplicative_multiset(d, detail::leading_exponents(G));
      auto m = mora_normal_form(R, f, G, d, &mult);
      if (!verify_mora(R, f, G, m, m.involutive ? &mult : nullptr)) out.fail("mora identity " + R.str(f));
      if (!m.remainder.is_zero())
        for (std::size_t k = 0; k < G.size(); ++k)
          if (involutively_divides(G[k].le(), mult[k], m.remainder.le())) out.fail("reducible remainder " + R.str(f));
    } catch (const std::invalid_argument& e) {
      out.fail(e.what());
    }
  }
  return out;
}

}  // namespace invol::props

#endif
