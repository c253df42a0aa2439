#ifndef INVOL_ORACLE_HPP
#define INVOL_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invol/completion.hpp"
#include "invol/division.hpp"
#include "invol/mono_completion.hpp"
#include "invol/poly.hpp"
#include "invol/reduction.hpp"

namespace invol {

// ---- monomial brute force ----

struct SpanReport {
  std::vector<MultiIndex> involutive;   // at least one involutive divisor
  std::vector<MultiIndex> obstructions; // in the span, no involutive divisor
  std::vector<MultiIndex> outside;
  /// Span members with two or more involutive divisors.
  std::vector<MultiIndex> overlaps;
};

/// Classify every multi index of degree <= bound against N.
SpanReport bruteforce_span(const std::vector<MultiIndex>& N, const Division& d, std::uint64_t bound);

// ---- Buchberger ----

struct BuchbergerCaps {
  std::size_t pairs = 200000;
  std::size_t nf_terms = kDefaultTermCap;
};

/// Sort by leading exponent, ascending.
template <class K>
void sort_by_leading(const Ring<K>& R, std::vector<Poly<K>>& G) {
  std::sort(G.begin(), G.end(), [&](const Poly<K>& a, const Poly<K>& b) { return R.cmp(a.le(), b.le()) < 0; });
}

/// Reduced, monic, minimal: drop redundant heads and fully reduce every tail.
template <class K>
std::vector<Poly<K>> interreduce(const Ring<K>& R, std::vector<Poly<K>> G, std::size_t term_cap = kDefaultTermCap) {
  G.erase(std::remove_if(G.begin(), G.end(), [](const Poly<K>& p) { return p.is_zero(); }), G.end());
  sort_by_leading(R, G);
  std::vector<Poly<K>> keep;
  for (const auto& g : G) {
    bool redundant = false;
    for (const auto& k : keep) redundant = redundant || divides(k.le(), g.le());
    if (!redundant) keep.push_back(R.monic(g));
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<Poly<K>> others;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (j != i) others.push_back(keep[j]);
    Poly<K> tail = keep[i];
    tail.terms.erase(tail.terms.begin());
    Poly<K> lead = R.monomial(keep[i].le(), keep[i].lc());
    keep[i] = R.monic(R.add(lead, ordinary_normal_form(R, tail, others, NFMode::Full, term_cap).remainder));
  }
  return keep;
}

/// Reduced left Groebner basis from left S-polynomials, with the chain
/// criterion as the only pair filter. Pairs are taken by smallest lcm.
template <class K>
std::vector<Poly<K>> buchberger(const Ring<K>& R, const std::vector<Poly<K>>& F, const BuchbergerCaps& caps = {}) {
  static_assert(CoeffTraits<K>::is_field, "buchberger needs field coefficients");
  using T = CoeffTraits<K>;
  if (!R.order().is_monoid_order()) throw std::invalid_argument("buchberger: the order is not a monoid order");
  std::vector<Poly<K>> G;
  for (const auto& f : F)
    if (!f.is_zero()) G.push_back(R.monic(f));
  if (G.empty()) return G;
  std::set<std::pair<std::size_t, std::size_t>> pending, done;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  auto is_done = [&](std::size_t a, std::size_t b) {
    return done.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  std::size_t processed = 0;
  while (!pending.empty()) {
    if (++processed > caps.pairs) throw StepCapExceeded("buchberger exceeded the pair cap");
    auto best = pending.begin();
    MultiIndex best_lcm = lcm(G[best->first].le(), G[best->second].le());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      MultiIndex l = lcm(G[it->first].le(), G[it->second].le());
      if (R.cmp(l, best_lcm) < 0) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k)
      chain = k != i && k != j && divides(G[k].le(), best_lcm) && is_done(i, k) && is_done(j, k);
    done.insert({i, j});
    if (chain) continue;
    Poly<K> a = R.mul_term(T::one(), best_lcm - G[i].le(), G[i]);
    Poly<K> b = R.mul_term(T::one(), best_lcm - G[j].le(), G[j]);
    Poly<K> s = R.sub(R.scale(b.lc(), a), R.scale(a.lc(), b));
    Poly<K> h = ordinary_normal_form(R, s, G, NFMode::Full, caps.nf_terms).remainder;
    if (h.is_zero()) continue;
    G.push_back(R.monic(h));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pending.insert({k, G.size() - 1});
  }
  auto out = interreduce(R, G, caps.nf_terms);
  sort_by_leading(R, out);
  return out;
}

// ---- random inputs ----

/// Random polynomial with at most `terms` terms of degree <= max_degree and
/// integer coefficients in [-height, height].
template <class K>
Poly<K> random_polynomial(const Ring<K>& R, std::mt19937_64& rng, std::uint64_t max_degree, std::size_t terms,
                          int height = 5) {
  const auto monos = monomials_up_to_degree(R.dim(), max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-height, height);
  std::vector<Term<K>> ts;
  for (std::size_t t = 0; t < terms; ++t) {
    int c = coef(rng);
    if (c == 0) c = 1;
    ts.push_back({monos[pick(rng)], CoeffTraits<K>::from_rational(Rational(c))});
  }
  return R.normalize(std::move(ts));
}

/// Random left combination sum c_k x^mu_k * F_k.
template <class K>
Poly<K> random_member(const Ring<K>& R, const std::vector<Poly<K>>& F, std::mt19937_64& rng,
                      std::uint64_t multiplier_degree, std::size_t terms = 2) {
  Poly<K> acc = R.zero();
  for (const auto& f : F) acc = R.add(acc, R.mul(random_polynomial(R, rng, multiplier_degree, terms), f));
  return acc;
}

// ---- equivalence of the two pipelines ----

struct Verdict {
  bool agree = true;
  std::string divergence;
  std::size_t basis_size = 0;
  std::size_t groebner_size = 0;
};

/// Complete F involutively and with Buchberger; compare the minimal bases
/// of the leading ideals and normal forms of sampled polynomials.
template <class K>
Verdict equivalence_check(const Ring<K>& R, const std::vector<Poly<K>>& F, const Division& d, std::uint64_t seed,
                          std::size_t samples = 50, const std::vector<Poly<K>>* basis_override = nullptr) {
  Verdict v;
  std::vector<Poly<K>> H;
  if (basis_override) {
    H = *basis_override;
  } else {
    H = complete(R, F, d).generators;
  }
  auto G = buchberger(R, F);
  v.basis_size = H.size();
  v.groebner_size = G.size();
  std::vector<MultiIndex> lh = minimal_monomial_basis(detail::leading_exponents(H));
  std::vector<MultiIndex> lg = minimal_monomial_basis(detail::leading_exponents(G));
  if (lh != lg) {
    v.agree = false;
    v.divergence = "leading ideals differ";
    return v;
  }
  if (H.empty()) return v;
  std::mt19937_64 rng(seed);
  const auto mult = multiplicative_multiset(d, detail::leading_exponents(H));
  std::uint64_t deg = 0;
  for (const auto& f : F) deg = std::max(deg, f.degree());
  for (std::size_t s = 0; s < samples; ++s) {
    Poly<K> p = (s % 2 == 0) ? random_member(R, F, rng, 1) : R.add(random_member(R, F, rng, 1),
                                                                     random_polynomial(R, rng, deg, 2));
    Poly<K> a = involutive_normal_form(R, p, H, d, NFMode::Full, &mult).remainder;
    Poly<K> b = ordinary_normal_form(R, p, G).remainder;
    if (a != b) {
      v.agree = false;
      v.divergence = "normal forms differ on " + R.str(p) + ": " + R.str(a) + " vs " + R.str(b);
      return v;
    }
  }
  return v;
}

}  // namespace invol

#endif
