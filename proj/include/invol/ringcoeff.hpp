#ifndef INVOL_RINGCOEFF_HPP
#define INVOL_RINGCOEFF_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "invol/completion.hpp"
#include "invol/division.hpp"
#include "invol/poly.hpp"
#include "invol/reduction.hpp"
#include "invol/ringsolver.hpp"

namespace invol {

enum class CoefficientDomain { Rationals, Integers, UnivariatePolyOverRationals };

/// Leading-coefficient data of the set bar H_{f,L}: the products
/// x^(le f - le g) * g for every g whose involutive cone contains le f.
template <class K>
struct LeadingCone {
  std::vector<std::size_t> members;
  std::vector<Poly<K>> products;
  std::vector<K> coefficients;
};

template <class K>
LeadingCone<K> leading_cone(const Ring<K>& R, const MultiIndex& nu, const std::vector<Poly<K>>& H,
                            const std::vector<IndexSet>& mult) {
  LeadingCone<K> out;
  for (std::size_t k = 0; k < H.size(); ++k) {
    if (!involutively_divides(H[k].le(), mult[k], nu)) continue;
    Poly<K> p = R.mul_term(CoeffTraits<K>::one(), nu - H[k].le(), H[k]);
    if (p.is_zero() || p.le() != nu) continue;
    out.members.push_back(k);
    out.coefficients.push_back(p.lc());
    out.products.push_back(std::move(p));
  }
  return out;
}

/// Involutive R-saturation with head autoreduction. Sweeps the leading
/// exponents from the top; every change of the set restarts the sweep.
template <class K>
std::vector<Poly<K>> rsaturate(const Ring<K>& R, const std::vector<Poly<K>>& F, const Division& d,
                               const CompletionCaps& caps = {}) {
  if (!R.algebra().centred()) throw std::invalid_argument("rsaturate: commutation relations are not centred");
  if (!R.order().is_monoid_order()) throw std::invalid_argument("rsaturate: the order is not a monoid order");
  std::vector<Poly<K>> H;
  for (const auto& f : F)
    if (!f.is_zero()) H.push_back(detail::normalise_unit(R, f));
  std::vector<Poly<K>> S = H;
  std::size_t rounds = 0;
  while (!S.empty()) {
    if (++rounds > caps.insertions) throw StepCapExceeded("rsaturate exceeded the round cap", detail::leading_exponents(H));
    MultiIndex nu = S.front().le();
    for (const auto& s : S)
      if (R.cmp(s.le(), nu) > 0) nu = s.le();
    std::vector<Poly<K>> Snu;
    for (const auto& h : H)
      if (h.le() == nu) Snu.push_back(h);
    S.erase(std::remove_if(S.begin(), S.end(), [&](const Poly<K>& p) { return p.le() == nu; }), S.end());
    std::vector<Poly<K>> Hp = H;
    const auto mult = multiplicative_multiset(d, detail::leading_exponents(H));
    for (const auto& f : std::vector<Poly<K>>(Snu)) {
      // Head reduce f by H minus f with the assignment of the full set.
      std::vector<Poly<K>> others;
      std::vector<IndexSet> omult;
      bool skipped = false;
      for (std::size_t b = 0; b < H.size(); ++b) {
        if (!skipped && H[b] == f) {
          skipped = true;
          continue;
        }
        others.push_back(H[b]);
        omult.push_back(mult[b]);
      }
      Poly<K> h = involutive_normal_form(R, f, others, d, NFMode::HeadOnly, &omult, caps.nf_terms).remainder;
      if (h == f) continue;
      Snu.erase(std::find(Snu.begin(), Snu.end(), f));
      Hp.erase(std::find(Hp.begin(), Hp.end(), f));
      if (!h.is_zero()) Hp.push_back(detail::normalise_unit(R, h));
    }
    if (!Snu.empty() && !Hp.empty()) {
      const auto mp = multiplicative_multiset(d, detail::leading_exponents(Hp));
      auto cone = leading_cone(R, nu, Hp, mp);
      for (const auto& syz : RingSolver<K>::syzygies(cone.coefficients)) {
        Poly<K> p = R.zero();
        for (std::size_t i = 0; i < syz.size(); ++i)
          if (!CoeffTraits<K>::is_zero(syz[i])) p = R.add(p, R.scale(syz[i], cone.products[i]));
        Poly<K> h = involutive_normal_form(R, p, Hp, d, NFMode::Full, nullptr, caps.nf_terms).remainder;
        if (!h.is_zero()) Hp.push_back(detail::normalise_unit(R, h));
      }
    }
    if (Hp != H) {
      H = std::move(Hp);
      S = H;
    }
  }
  return H;
}

/// Completion over a coefficient ring: the head autoreduction of the field
/// algorithm is replaced by R-saturation. The result is a weak basis.
template <class K>
InvolutiveBasis<K> complete_over_ring(const Ring<K>& R, const std::vector<Poly<K>>& F, const Division& d,
                                      const CompletionCaps& caps = {}) {
  InvolutiveBasis<K> B;
  B.division = d;
  std::vector<Poly<K>> H = rsaturate(R, F, d, caps);
  std::size_t inserted = 0;
  while (!H.empty()) {
    const auto mult = multiplicative_multiset(d, detail::leading_exponents(H));
    bool grew = false;
    for (const auto& c : detail::prolongations(R, H, mult)) {
      Poly<K> p = R.mul_term(CoeffTraits<K>::one(), MultiIndex::unit(R.dim(), c.var), H[c.gen]);
      auto rep = involutive_normal_form(R, p, H, d, NFMode::Full, &mult, caps.nf_terms);
      if (rep.remainder.is_zero()) continue;
      Poly<K> h = detail::normalise_unit(R, rep.remainder);
      B.trace.push_back({c.le, "prolong " + R.names()[c.var] + " * g" + std::to_string(c.gen + 1) +
                                   " -> insert " + R.mono_str(h.le())});
      B.added.push_back(h);
      H.push_back(std::move(h));
      grew = true;
      break;
    }
    if (!grew) break;
    if (++inserted > caps.insertions)
      throw StepCapExceeded("ring completion exceeded the insertion cap", detail::leading_exponents(H));
    H = rsaturate(R, H, d, caps);
  }
  B.generators = std::move(H);
  if (!B.generators.empty()) B.multiplicative = multiplicative_multiset(d, B.leading_exponents());
  B.strength = Strength::Weak;
  return B;
}

/// Involutive R-saturation checked directly: for every leading
/// exponent of H the syzygy combinations reduce to zero.
template <class K>
bool is_rsaturated(const Ring<K>& R, const std::vector<Poly<K>>& H, const Division& d) {
  if (H.empty()) return true;
  const auto mult = multiplicative_multiset(d, detail::leading_exponents(H));
  for (const auto& f : H) {
    auto cone = leading_cone(R, f.le(), H, mult);
    for (const auto& syz : RingSolver<K>::syzygies(cone.coefficients)) {
      Poly<K> p = R.zero();
      for (std::size_t i = 0; i < syz.size(); ++i) p = R.add(p, R.scale(syz[i], cone.products[i]));
      if (!involutive_normal_form(R, p, H, d, NFMode::Full, &mult).remainder.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace invol

#endif
