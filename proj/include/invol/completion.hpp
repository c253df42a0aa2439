#ifndef INVOL_COMPLETION_HPP
#define INVOL_COMPLETION_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "invol/division.hpp"
#include "invol/mono_completion.hpp"
#include "invol/poly.hpp"
#include "invol/reduction.hpp"

namespace invol {

enum class Sidedness { Left, TwoSidedAsLeft };

struct CompletionCaps {
  std::size_t insertions = 5000;
  std::size_t nf_terms = kDefaultTermCap;
};

/// One step of the completion log: the prolongation examined and what happened.
struct TraceEntry {
  MultiIndex le;
  std::string action;
};

template <class K>
struct InvolutiveBasis {
  std::vector<Poly<K>> generators;
  std::vector<IndexSet> multiplicative;
  Division division;
  Strength strength = Strength::Weak;
  Sidedness sidedness = Sidedness::Left;
  /// Polynomials inserted by the completion, in discovery order.
  std::vector<Poly<K>> added;
  std::vector<TraceEntry> trace;
  /// Size of the basis before dehomogenisation (homogenisation pipeline only).
  std::size_t homogeneous_size = 0;

  std::vector<MultiIndex> leading_exponents() const { return detail::leading_exponents(generators); }
};

class VerificationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <class K>
Poly<K> normalise_unit(const Ring<K>& R, const Poly<K>& f) {
  if constexpr (CoeffTraits<K>::is_field) {
    return R.monic(f);
  } else {
    return f.is_zero() ? f : R.scale(CoeffTraits<K>::canonical_unit(f.lc()), f);
  }
}

template <class K>
Strength strength_of(const std::vector<Poly<K>>& H) {
  auto N = leading_exponents(H);
  std::sort(N.begin(), N.end(), MultiIndexKeyLess{});
  return std::adjacent_find(N.begin(), N.end()) == N.end() ? Strength::Strong : Strength::Weak;
}

struct Candidate {
  MultiIndex le;
  std::size_t gen;
  std::size_t var;
};

/// Non-multiplicative prolongations sorted by leading exponent, generator, variable.
template <class K>
std::vector<Candidate> prolongations(const Ring<K>& R, const std::vector<Poly<K>>& H,
                                     const std::vector<IndexSet>& mult) {
  std::vector<Candidate> out;
  for (std::size_t k = 0; k < H.size(); ++k)
    for (std::size_t j = 0; j < R.dim(); ++j)
      if (!has_index(mult[k], j)) out.push_back({H[k].le() + MultiIndex::unit(R.dim(), j), k, j});
  std::stable_sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
    int c = R.cmp(a.le, b.le);
    if (c != 0) return c < 0;
    return std::tie(a.gen, a.var) < std::tie(b.gen, b.var);
  });
  return out;
}

}  // namespace detail

/// Head-autoreduced, normalised copy of F with zero entries removed.
template <class K>
std::vector<Poly<K>> prepare_generators(const Ring<K>& R, const std::vector<Poly<K>>& F, const Division& d,
                                        const CompletionCaps& caps) {
  std::vector<Poly<K>> H;
  for (const auto& f : F)
    if (!f.is_zero()) H.push_back(detail::normalise_unit(R, f));
  H = involutive_head_autoreduce(R, std::move(H), d, caps.nf_terms);
  for (auto& h : H) h = detail::normalise_unit(R, h);
  return H;
}

/// Involutive completion over a coefficient field. Every round inserts the
/// normal form of the smallest non-multiplicative prolongation outside the
/// involutive span and head autoreduces again.
template <class K>
InvolutiveBasis<K> complete(const Ring<K>& R, const std::vector<Poly<K>>& F, const Division& d,
                            const CompletionCaps& caps = {}) {
  static_assert(CoeffTraits<K>::is_field, "complete needs field coefficients; use complete_over_ring");
  if (!R.order().is_monoid_order()) throw std::invalid_argument("complete: the order is not a monoid order");
  InvolutiveBasis<K> B;
  B.division = d;
  std::vector<Poly<K>> H = prepare_generators(R, F, d, caps);
  std::size_t inserted = 0;
  while (!H.empty()) {
    const auto mult = multiplicative_multiset(d, detail::leading_exponents(H));
    bool grew = false;
    for (const auto& c : detail::prolongations(R, H, mult)) {
      Poly<K> p = R.mul_term(CoeffTraits<K>::one(), MultiIndex::unit(R.dim(), c.var), H[c.gen]);
      auto rep = involutive_normal_form(R, p, H, d, NFMode::Full, &mult, caps.nf_terms);
      if (rep.remainder.is_zero()) continue;
      Poly<K> h = R.monic(rep.remainder);
      B.trace.push_back({c.le, "prolong " + R.names()[c.var] + " * g" + std::to_string(c.gen + 1) +
                                   " -> insert " + R.mono_str(h.le())});
      B.added.push_back(h);
      H.push_back(std::move(h));
      grew = true;
      break;
    }
    if (!grew) break;
    if (++inserted > caps.insertions) {
      throw StepCapExceeded("completion exceeded " + std::to_string(caps.insertions) + " insertions",
                            detail::leading_exponents(H), detail::leading_exponents(B.added));
    }
    H = involutive_head_autoreduce(R, std::move(H), d, caps.nf_terms);
    for (auto& h : H) h = R.monic(h);
  }
  B.generators = std::move(H);
  if (!B.generators.empty()) B.multiplicative = multiplicative_multiset(d, B.leading_exponents());
  B.strength = detail::strength_of(B.generators);
  return B;
}

/// Local involution check: every non-multiplicative prolongation has a
/// vanishing involutive normal form.
template <class K>
bool locally_involutive(const Ring<K>& R, const std::vector<Poly<K>>& H, const Division& d,
                        std::size_t term_cap = kDefaultTermCap) {
  if (H.empty()) return true;
  const auto mult = multiplicative_multiset(d, detail::leading_exponents(H));
  for (const auto& c : detail::prolongations(R, H, mult)) {
    Poly<K> p = R.mul_term(CoeffTraits<K>::one(), MultiIndex::unit(R.dim(), c.var), H[c.gen]);
    if (!involutive_normal_form(R, p, H, d, NFMode::Full, &mult, term_cap).remainder.is_zero()) return false;
  }
  return true;
}

/// Replace every tail by its full involutive normal form and make monic.
template <class K>
InvolutiveBasis<K> minimal_candidate(const Ring<K>& R, const InvolutiveBasis<K>& basis) {
  if (basis.strength != Strength::Strong) throw std::invalid_argument("minimal_candidate: basis is not strong");
  InvolutiveBasis<K> out = basis;
  out.trace.clear();
  const auto& H = basis.generators;
  for (std::size_t k = 0; k < H.size(); ++k) {
    Poly<K> tail = H[k];
    tail.terms.erase(tail.terms.begin());
    auto rep = involutive_normal_form(R, tail, H, basis.division, NFMode::Full, &basis.multiplicative);
    out.generators[k] = R.monic(R.add(R.monomial(H[k].le(), H[k].lc()), rep.remainder));
  }
  return out;
}

/// Bit-exact check of phi * f = psi * g.
template <class K>
bool verify_ore_identity(const Ring<K>& R, const Poly<K>& phi, const Poly<K>& f, const Poly<K>& psi,
                         const Poly<K>& g) {
  return R.mul(phi, f) == R.mul(psi, g);
}

template <class K>
struct OreMultipliers {
  Poly<K> phi;
  Poly<K> psi;
  std::size_t steps = 0;
};

/// Left Ore multipliers phi * f = psi * g by iterated pseudo-reduction.
/// The sequence h_1 = r g*f - s f*g, h_{i+1} = r f*h_i - s h_i*f (or with g
/// when `use_g`) is reduced against all previous elements while tracking
/// h = A*f + B*g until it vanishes.
template <class K>
OreMultipliers<K> ore_multipliers(const Ring<K>& R, const Poly<K>& f, const Poly<K>& g, bool use_g = false,
                                  std::size_t max_steps = 64) {
  static_assert(CoeffTraits<K>::is_field, "ore_multipliers needs field coefficients");
  using T = CoeffTraits<K>;
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("ore_multipliers: zero input");
  OreMultipliers<K> out;
  if (R.commutative()) {
    out.phi = g;
    out.psi = f;
  } else {
    struct Tracked {
      Poly<K> h, A, B;
    };
    std::vector<Tracked> F{{f, R.one(), R.zero()}, {g, R.zero(), R.one()}};
    const Poly<K>& q = use_g ? g : f;
    // r*x - s*y with lc cancelled, for x and y of equal leading exponent.
    auto cancel = [&](const Poly<K>& x, const Poly<K>& y) { return std::make_pair(y.lc(), x.lc()); };
    Poly<K> gf = R.mul(g, f), fg = R.mul(f, g);
    auto [r, s] = cancel(gf, fg);
    Tracked cur{R.sub(R.scale(r, gf), R.scale(s, fg)), R.scale(r, g), R.neg(R.scale(s, f))};
    bool done = false;
    for (std::size_t step = 1; step <= max_steps; ++step) {
      out.steps = step;
      // Ordinary reduction against all tracked elements.
      while (!cur.h.is_zero()) {
        std::optional<std::size_t> best;
        for (std::size_t k = 0; k < F.size(); ++k)
          if (divides(F[k].h.le(), cur.h.le()) && (!best || R.cmp(F[k].h.le(), F[*best].h.le()) < 0)) best = k;
        if (!best) break;
        const MultiIndex mu = cur.h.le() - F[*best].h.le();
        Poly<K> prod = R.mul_term(T::one(), mu, F[*best].h);
        K c = cur.h.lc() * T::inverse(prod.lc());
        cur.h = R.sub(cur.h, R.scale(c, prod));
        cur.A = R.sub_mul(cur.A, c, mu, F[*best].A);
        cur.B = R.sub_mul(cur.B, c, mu, F[*best].B);
      }
      if (cur.h.is_zero()) {
        done = true;
        break;
      }
      Tracked next;
      Poly<K> qh = R.mul(q, cur.h), hq = R.mul(cur.h, q);
      auto [r2, s2] = cancel(qh, hq);
      next.h = R.sub(R.scale(r2, qh), R.scale(s2, hq));
      if (use_g) {
        next.A = R.scale(r2, R.mul(q, cur.A));
        next.B = R.sub(R.scale(r2, R.mul(q, cur.B)), R.scale(s2, cur.h));
      } else {
        next.A = R.sub(R.scale(r2, R.mul(q, cur.A)), R.scale(s2, cur.h));
        next.B = R.scale(r2, R.mul(q, cur.B));
      }
      F.push_back(cur);
      cur = std::move(next);
    }
    if (!done) throw StepCapExceeded("ore_multipliers: no common multiple found within the step cap");
    out.phi = cur.A;
    out.psi = R.neg(cur.B);
    if (!out.phi.is_zero()) {
      K c = T::inverse(out.phi.lc());
      out.phi = R.scale(c, out.phi);
      out.psi = R.scale(c, out.psi);
    }
  }
  if (out.phi.is_zero() || out.psi.is_zero()) throw VerificationFailure("ore_multipliers: trivial multipliers");
  if (!verify_ore_identity(R, out.phi, f, out.psi, g))
    throw VerificationFailure("ore_multipliers: phi*f != psi*g");
  return out;
}

/// Left involutive basis of the two-sided ideal generated by F. Coefficients
/// are central, so only right multiplication by the variables is closed.
template <class K>
InvolutiveBasis<K> two_sided_basis(const Ring<K>& R, const std::vector<Poly<K>>& F, const Division& d,
                                   const CompletionCaps& caps = {}) {
  if (!R.algebra().centred()) throw std::invalid_argument("two_sided_basis: coefficients must be central");
  InvolutiveBasis<K> first = complete(R, F, d, caps);
  std::vector<Poly<K>> H = first.generators;
  std::vector<Poly<K>> S = H;
  std::vector<TraceEntry> trace = first.trace;
  std::size_t inserted = 0;
  while (!S.empty()) {
    std::vector<Poly<K>> next;
    for (const auto& f : S) {
      for (std::size_t i = 0; i < R.dim(); ++i) {
        Poly<K> p = R.mul_right_term(f, MultiIndex::unit(R.dim(), i));
        auto rep = involutive_normal_form(R, p, H, d, NFMode::Full, nullptr, caps.nf_terms);
        if (rep.remainder.is_zero()) continue;
        Poly<K> h = R.monic(rep.remainder);
        trace.push_back({h.le(), "right " + R.names()[i] + " -> insert " + R.mono_str(h.le())});
        H.push_back(h);
        next.push_back(std::move(h));
        if (++inserted > caps.insertions)
          throw StepCapExceeded("two-sided closure exceeded the insertion cap", detail::leading_exponents(H));
      }
    }
    S = std::move(next);
  }
  InvolutiveBasis<K> out = complete(R, H, d, caps);
  out.sidedness = Sidedness::TwoSidedAsLeft;
  out.trace.insert(out.trace.begin(), trace.begin(), trace.end());
  for (const auto& h : out.generators) {
    for (std::size_t i = 0; i < R.dim(); ++i) {
      Poly<K> p = R.mul_right_term(h, MultiIndex::unit(R.dim(), i));
      if (!involutive_normal_form(R, p, out.generators, d, NFMode::Full, &out.multiplicative, caps.nf_terms)
               .remainder.is_zero())
        throw VerificationFailure("two_sided_basis: right product outside the left ideal");
    }
  }
  return out;
}

}  // namespace invol

#endif
