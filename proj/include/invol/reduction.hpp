#ifndef INVOL_REDUCTION_HPP
#define INVOL_REDUCTION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invol/division.hpp"
#include "invol/mono_completion.hpp"
#include "invol/poly.hpp"
#include "invol/ringsolver.hpp"

namespace invol {

enum class NFMode { Full, HeadOnly };

constexpr std::size_t kDefaultTermCap = 1000000;

/// f = sum_k coefficients[k] * H[k] + remainder.
template <class K>
struct StandardRepresentation {
  std::vector<Poly<K>> coefficients;
  Poly<K> remainder;
  bool involutive = true;
};

namespace detail {

template <class K>
void require_generators(const std::vector<Poly<K>>& H, const Ring<K>& R, const char* who) {
  if (!R.order().is_monoid_order())
    throw std::invalid_argument(std::string(who) + ": the order is not a monoid order; use the Mora normal form");
  for (const auto& h : H) {
    if (h.is_zero()) throw std::invalid_argument(std::string(who) + ": zero generator");
    if (h.le().size() != R.dim()) throw DimensionError(std::string(who) + ": generator dimension mismatch");
  }
}

template <class K>
std::vector<MultiIndex> leading_exponents(const std::vector<Poly<K>>& H) {
  std::vector<MultiIndex> out;
  out.reserve(H.size());
  for (const auto& h : H) out.push_back(h.le());
  return out;
}

/// Shared reduction loop. `divisors(mu)` lists the admissible reducer
/// positions for a leading exponent, best first.
template <class K, class Divisors>
StandardRepresentation<K> reduce(const Ring<K>& R, const Poly<K>& f, const std::vector<Poly<K>>& H,
                                 NFMode mode, std::size_t term_cap, bool involutive, Divisors divisors) {
  using T = CoeffTraits<K>;
  StandardRepresentation<K> rep;
  rep.coefficients.assign(H.size(), R.zero());
  rep.involutive = involutive;
  Poly<K> h = f;
  std::size_t work = 0;
  while (!h.is_zero()) {
    const MultiIndex mu = h.le();
    std::vector<std::size_t> cand = divisors(mu);
    bool reduced = false;
    if (!cand.empty()) {
      if constexpr (T::is_field) {
        const std::size_t k = cand.front();
        const MultiIndex shift = mu - H[k].le();
        Poly<K> prod = R.mul_term(T::one(), shift, H[k]);
        K c = h.lc() * T::inverse(prod.lc());
        work += prod.size();
        h = R.sub(h, R.scale(c, prod));
        rep.coefficients[k] = R.add(rep.coefficients[k], R.monomial(shift, c));
        reduced = true;
      } else {
        std::vector<Poly<K>> prods;
        std::vector<K> lcs;
        for (std::size_t k : cand) {
          prods.push_back(R.mul_term(T::one(), mu - H[k].le(), H[k]));
          lcs.push_back(prods.back().lc());
        }
        if (auto cert = RingSolver<K>::membership(h.lc(), lcs)) {
          for (std::size_t i = 0; i < cand.size(); ++i) {
            if (T::is_zero((*cert)[i])) continue;
            const std::size_t k = cand[i];
            work += prods[i].size();
            h = R.sub(h, R.scale((*cert)[i], prods[i]));
            rep.coefficients[k] = R.add(rep.coefficients[k], R.monomial(mu - H[k].le(), (*cert)[i]));
          }
          reduced = true;
        }
      }
    }
    if (!reduced) {
      if (mode == NFMode::HeadOnly) break;
      rep.remainder.terms.push_back(h.terms.front());
      h.terms.erase(h.terms.begin());
    }
    if (++work > term_cap) throw StepCapExceeded("normal form exceeded the term cap");
  }
  if (mode == NFMode::HeadOnly) rep.remainder = R.add(rep.remainder, h);
  return rep;
}

}  // namespace detail

/// Involutive normal form of f with respect to H. Multiplicative indices are
/// taken from `mult` when given, otherwise assigned to le(H) by the division.
/// Reducers are chosen as the involutive divisor with the smallest leading
/// exponent; over rings the leading coefficient is solved against all of them.
template <class K>
StandardRepresentation<K> involutive_normal_form(const Ring<K>& R, const Poly<K>& f,
                                                 const std::vector<Poly<K>>& H, const Division& d,
                                                 NFMode mode = NFMode::Full,
                                                 const std::vector<IndexSet>* mult = nullptr,
                                                 std::size_t term_cap = kDefaultTermCap) {
  detail::require_generators(H, R, "involutive_normal_form");
  const auto N = detail::leading_exponents(H);
  std::vector<IndexSet> own;
  if (!mult) {
    if (!H.empty()) own = multiplicative_multiset(d, N);
    mult = &own;
  }
  if (mult->size() != H.size()) throw std::invalid_argument("involutive_normal_form: multiplicative sets do not match H");
  const TermOrder& ord = R.order();
  auto divisors = [&](const MultiIndex& mu) {
    std::vector<std::size_t> out;
    if constexpr (CoeffTraits<K>::is_field) {
      if (auto k = involutive_divisor(N, *mult, mu, ord)) out.push_back(*k);
    } else {
      for (std::size_t k = 0; k < N.size(); ++k)
        if (involutively_divides(N[k], (*mult)[k], mu)) out.push_back(k);
    }
    return out;
  };
  return detail::reduce(R, f, H, mode, term_cap, true, divisors);
}

/// Classical normal form: any leading exponent dividing the current one may reduce.
template <class K>
StandardRepresentation<K> ordinary_normal_form(const Ring<K>& R, const Poly<K>& f, const std::vector<Poly<K>>& G,
                                               NFMode mode = NFMode::Full,
                                               std::size_t term_cap = kDefaultTermCap) {
  detail::require_generators(G, R, "ordinary_normal_form");
  const auto N = detail::leading_exponents(G);
  const TermOrder& ord = R.order();
  auto divisors = [&](const MultiIndex& mu) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < N.size(); ++k) {
      if (!divides(N[k], mu)) continue;
      if constexpr (CoeffTraits<K>::is_field) {
        if (out.empty() || ord.less(N[k], N[out.front()])) out.assign(1, k);
      } else {
        out.push_back(k);
      }
    }
    return out;
  };
  return detail::reduce(R, f, G, mode, term_cap, false, divisors);
}

/// sum P_h * h + remainder
template <class K>
Poly<K> reconstruct(const Ring<K>& R, const std::vector<Poly<K>>& H, const StandardRepresentation<K>& rep) {
  Poly<K> acc = rep.remainder;
  for (std::size_t k = 0; k < H.size(); ++k)
    if (!rep.coefficients[k].is_zero()) acc = R.add(acc, R.mul(rep.coefficients[k], H[k]));
  return acc;
}

/// Reconstruction identity and, for involutive representations, the
/// multiplicative-variable and leading-exponent conditions.
template <class K>
bool verify_representation(const Ring<K>& R, const Poly<K>& f, const std::vector<Poly<K>>& H,
                           const StandardRepresentation<K>& rep, const std::vector<IndexSet>* mult = nullptr) {
  if (rep.coefficients.size() != H.size()) return false;
  if (reconstruct(R, H, rep) != f) return false;
  if (!rep.involutive) return true;
  for (std::size_t k = 0; k < H.size(); ++k) {
    const auto& P = rep.coefficients[k];
    if (P.is_zero()) continue;
    if (mult) {
      for (const auto& t : P.terms)
        for (std::size_t i = 0; i < t.e.size(); ++i)
          if (t.e[i] && !has_index((*mult)[k], i)) return false;
    }
    if (f.is_zero() || R.cmp(R.mul(P, H[k]).le(), f.le()) > 0) return false;
  }
  return true;
}

/// Involutive head autoreduction. The multiplicative indices are recomputed
/// on the whole set after every change; a generator is head reduced by the
/// others with the assignment of the full set. Zero results are dropped.
template <class K>
std::vector<Poly<K>> involutive_head_autoreduce(const Ring<K>& R, std::vector<Poly<K>> F, const Division& d,
                                                std::size_t term_cap = kDefaultTermCap) {
  F.erase(std::remove_if(F.begin(), F.end(), [](const Poly<K>& p) { return p.is_zero(); }), F.end());
  detail::require_generators(F, R, "involutive_head_autoreduce");
  while (F.size() > 1) {
    const auto N = detail::leading_exponents(F);
    const auto mult = multiplicative_multiset(d, N);
    // Smallest reducible leading exponent first, then lowest position.
    std::optional<std::size_t> pick;
    for (std::size_t a = 0; a < F.size(); ++a) {
      bool reducible = false;
      for (std::size_t b = 0; b < F.size() && !reducible; ++b)
        reducible = b != a && involutively_divides(N[b], mult[b], N[a]);
      if (!reducible) continue;
      if constexpr (!CoeffTraits<K>::is_field) {
        // Over rings the leading coefficient must lie in the ideal of the reducers' ones.
        std::vector<K> lcs;
        for (std::size_t b = 0; b < F.size(); ++b)
          if (b != a && involutively_divides(N[b], mult[b], N[a]))
            lcs.push_back(R.mul_term(CoeffTraits<K>::one(), N[a] - N[b], F[b]).lc());
        if (!RingSolver<K>::member(F[a].lc(), lcs)) continue;
      }
      if (!pick || R.cmp(N[a], N[*pick]) < 0) pick = a;
    }
    if (!pick) break;
    std::vector<Poly<K>> others;
    std::vector<IndexSet> omult;
    for (std::size_t b = 0; b < F.size(); ++b) {
      if (b == *pick) continue;
      others.push_back(F[b]);
      omult.push_back(mult[b]);
    }
    auto rep = involutive_normal_form(R, F[*pick], others, d, NFMode::HeadOnly, &omult, term_cap);
    if (rep.remainder.is_zero()) {
      F.erase(F.begin() + static_cast<std::ptrdiff_t>(*pick));
    } else {
      F[*pick] = std::move(rep.remainder);
    }
  }
  return F;
}

}  // namespace invol

#endif
