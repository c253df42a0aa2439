#ifndef INVOL_LOCAL_HPP
#define INVOL_LOCAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invol/completion.hpp"
#include "invol/division.hpp"
#include "invol/poly.hpp"
#include "invol/reduction.hpp"

namespace invol {

/// deg f - deg lt f
template <class K>
std::uint64_t ecart(const Poly<K>& f) {
  if (f.is_zero()) throw std::domain_error("ecart of the zero polynomial");
  return f.degree() - f.le().degree();
}

/// u * f - remainder = sum P_g * g with le(u) = 0.
template <class K>
struct MoraResult {
  Poly<K> remainder;
  Poly<K> unit;
  std::vector<Poly<K>> coefficients;
  bool involutive = true;
};

struct MoraOptions {
  /// Permit the Pommaret division on algebras without the subring property.
  bool allow_iterated = false;
  std::size_t step_cap = kDefaultTermCap;
};

template <class K>
void require_mora(const Ring<K>& R, const Division& d, const MoraOptions& opt) {
  if (R.algebra().mora_subring()) return;
  if (d.kind == Division::Kind::Pommaret && opt.allow_iterated) return;
  throw std::invalid_argument("Mora normal form: unsupported algebra/division pair (" +
                              family_name(R.algebra().family()) + ", " + d.str() + ")");
}

/// Involutive Mora normal form. Reducers are the elements of G with their
/// multiplicative indices and earlier intermediate remainders, which carry
/// the intersection of the index sets of the G-members used so far. Among
/// the admissible reducers the smallest ecart wins; ties prefer members of
/// G, then the smaller leading exponent, then the earlier position.
template <class K>
MoraResult<K> mora_normal_form(const Ring<K>& R, const Poly<K>& f, const std::vector<Poly<K>>& G, const Division& d,
                               const std::vector<IndexSet>* mult = nullptr, const MoraOptions& opt = {}) {
  static_assert(CoeffTraits<K>::is_field, "mora_normal_form needs field coefficients");
  using T = CoeffTraits<K>;
  require_mora(R, d, opt);
  for (const auto& g : G)
    if (g.is_zero()) throw std::invalid_argument("mora_normal_form: zero generator");
  std::vector<IndexSet> own;
  if (!mult) {
    if (!G.empty()) own = multiplicative_multiset(d, detail::leading_exponents(G));
    mult = &own;
  }
  struct Reducer {
    Poly<K> poly;
    IndexSet mult;
    std::optional<std::size_t> g;  // position in G
    Poly<K> unit;
    std::vector<Poly<K>> coeffs;
    std::uint64_t ecart;
  };
  std::vector<Reducer> red;
  for (std::size_t k = 0; k < G.size(); ++k) red.push_back({G[k], (*mult)[k], k, {}, {}, ecart(G[k])});

  MoraResult<K> out;
  out.unit = R.one();
  out.coefficients.assign(G.size(), R.zero());
  IndexSet common = all_indices(R.dim());
  std::vector<bool> used(G.size(), false);
  // Set once an intermediate remainder would be added although some reducer
  // already divides it with no larger ecart, only outside its restricted
  // cone. From there on plain divisibility is used so that the usual
  // termination argument applies; the representation is no longer involutive.
  bool plain = false;
  auto admissible = [&](const Reducer& r, const MultiIndex& mu) {
    return plain ? divides(r.poly.le(), mu) : involutively_divides(r.poly.le(), r.mult, mu);
  };
  Poly<K> h = f;
  std::size_t steps = 0;
  while (!h.is_zero()) {
    const MultiIndex mu = h.le();
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < red.size(); ++k) {
      if (!admissible(red[k], mu)) continue;
      if (!best) {
        best = k;
        continue;
      }
      const Reducer& a = red[k];
      const Reducer& b = red[*best];
      if (a.ecart != b.ecart) {
        if (a.ecart < b.ecart) best = k;
        continue;
      }
      if (a.g.has_value() != b.g.has_value()) {
        if (a.g) best = k;
        continue;
      }
      if (R.cmp(a.poly.le(), b.poly.le()) < 0) best = k;
    }
    if (!best) break;
    const std::size_t k = *best;
    const std::uint64_t eh = ecart(h);
    if (!plain && red[k].ecart > eh) {
      bool blocked = false;
      for (const auto& r : red) blocked = blocked || (r.ecart <= eh && divides(r.poly.le(), mu));
      if (blocked) {
        plain = true;
        out.involutive = false;
        continue;
      }
    }
    if (red[k].g && !used[*red[k].g]) {
      used[*red[k].g] = true;
      common &= red[k].mult;
    }
    if (red[k].ecart > eh) red.push_back({h, common, std::nullopt, out.unit, out.coefficients, eh});
    const Reducer& r = red[k];
    const MultiIndex shift = mu - r.poly.le();
    Poly<K> prod = R.mul_term(T::one(), shift, r.poly);
    K c = h.lc() * T::inverse(prod.lc());
    h = R.sub(h, R.scale(c, prod));
    if (r.g) {
      out.coefficients[*r.g] = R.add(out.coefficients[*r.g], R.monomial(shift, c));
    } else {
      out.unit = R.sub_mul(out.unit, c, shift, r.unit);
      for (std::size_t j = 0; j < G.size(); ++j)
        if (!r.coeffs[j].is_zero()) out.coefficients[j] = R.sub_mul(out.coefficients[j], c, shift, r.coeffs[j]);
    }
    if (++steps > opt.step_cap) throw StepCapExceeded("Mora normal form exceeded the step cap");
  }
  out.remainder = std::move(h);
  return out;
}

/// u * f - h == sum P_g * g, le(u) = 0 and the multiplicative-variable condition.
template <class K>
bool verify_mora(const Ring<K>& R, const Poly<K>& f, const std::vector<Poly<K>>& G, const MoraResult<K>& m,
                 const std::vector<IndexSet>* mult = nullptr) {
  if (m.unit.is_zero() || !m.unit.le().is_zero()) return false;
  if (m.coefficients.size() != G.size()) return false;
  Poly<K> lhs = R.sub(R.mul(m.unit, f), m.remainder);
  Poly<K> rhs = R.zero();
  for (std::size_t k = 0; k < G.size(); ++k) rhs = R.add(rhs, R.mul(m.coefficients[k], G[k]));
  if (lhs != rhs) return false;
  if (mult) {
    for (std::size_t k = 0; k < G.size(); ++k)
      for (const auto& t : m.coefficients[k].terms)
        for (std::size_t i = 0; i < t.e.size(); ++i)
          if (t.e[i] && !has_index((*mult)[k], i)) return false;
  }
  return true;
}

namespace detail {

/// Head autoreduction through Mora normal forms: f against H minus f with
/// the assignment of the full set.
template <class K>
std::vector<Poly<K>> mora_autoreduce(const Ring<K>& R, std::vector<Poly<K>> H, const Division& d,
                                     const MoraOptions& opt) {
  while (H.size() > 1) {
    const auto N = leading_exponents(H);
    const auto mult = multiplicative_multiset(d, N);
    std::optional<std::size_t> pick;
    for (std::size_t a = 0; a < H.size(); ++a) {
      bool reducible = false;
      for (std::size_t b = 0; b < H.size() && !reducible; ++b)
        reducible = b != a && involutively_divides(N[b], mult[b], N[a]);
      if (reducible && (!pick || R.cmp(N[a], N[*pick]) < 0)) pick = a;
    }
    if (!pick) break;
    std::vector<Poly<K>> others;
    std::vector<IndexSet> omult;
    for (std::size_t b = 0; b < H.size(); ++b) {
      if (b == *pick) continue;
      others.push_back(H[b]);
      omult.push_back(mult[b]);
    }
    auto m = mora_normal_form(R, H[*pick], others, d, &omult, opt);
    if (m.remainder.is_zero()) {
      H.erase(H.begin() + static_cast<std::ptrdiff_t>(*pick));
    } else {
      H[*pick] = R.monic(m.remainder);
    }
  }
  return H;
}

template <class K>
bool has_unit_head(const std::vector<Poly<K>>& H) {
  for (const auto& h : H)
    if (h.le().is_zero()) return true;
  return false;
}

/// lt(g) followed by the Mora normal form of its tail, as long as that
/// normal form needs no unit; otherwise the remaining tail is kept.
template <class K>
Poly<K> local_tail_reduce(const Ring<K>& R, const Poly<K>& g, const std::vector<Poly<K>>& H,
                          const std::vector<IndexSet>& mult, const Division& d, const MoraOptions& opt) {
  Poly<K> out;
  out.terms.push_back(g.terms.front());
  Poly<K> rest = g;
  rest.terms.erase(rest.terms.begin());
  for (std::size_t round = 0; !rest.is_zero() && round < 1000; ++round) {
    auto m = mora_normal_form(R, rest, H, d, &mult, opt);
    if (m.unit != R.one()) break;
    rest = std::move(m.remainder);
    if (rest.is_zero()) break;
    out.terms.push_back(rest.terms.front());
    rest.terms.erase(rest.terms.begin());
  }
  return R.add(out, rest);
}

/// Replace a strong basis of the localised ideal by the one whose leading
/// exponents form the involutive completion of the minimal generators of
/// le(H), with tails reduced.
template <class K>
std::vector<Poly<K>> local_minimize(const Ring<K>& R, const std::vector<Poly<K>>& H, const Division& d,
                                    const MoraOptions& opt) {
  if (H.empty()) return H;
  const auto N = leading_exponents(H);
  const auto M = complete_monomial(d, minimal_monomial_basis(N)).generators;
  std::vector<Poly<K>> G;
  for (const auto& mu : M) {
    std::optional<std::size_t> exact, div;
    for (std::size_t k = 0; k < H.size(); ++k) {
      if (N[k] == mu && !exact) exact = k;
      if (divides(N[k], mu) && (!div || R.cmp(N[k], N[*div]) > 0)) div = k;
    }
    if (exact) {
      G.push_back(H[*exact]);
    } else {
      G.push_back(R.monic(R.mul_term(CoeffTraits<K>::one(), mu - N[*div], H[*div])));
    }
  }
  const auto mult = multiplicative_multiset(d, leading_exponents(G));
  std::vector<Poly<K>> out;
  for (const auto& g : G) out.push_back(R.monic(local_tail_reduce(R, g, G, mult, d, opt)));
  return out;
}

}  // namespace detail

/// Completion in the localisation with Mora normal forms. All data stay
/// polynomial; a generator with leading exponent 0 is a unit there and the
/// basis collapses to {1}. The result is brought to the minimal involutive
/// leading-exponent set with reduced tails.
template <class K>
InvolutiveBasis<K> complete_local(const Ring<K>& R, const std::vector<Poly<K>>& F, const Division& d,
                                  const CompletionCaps& caps = {}, const MoraOptions& opt = {}) {
  static_assert(CoeffTraits<K>::is_field, "complete_local needs field coefficients");
  require_mora(R, d, opt);
  InvolutiveBasis<K> B;
  B.division = d;
  std::vector<Poly<K>> H;
  for (const auto& f : F)
    if (!f.is_zero()) H.push_back(R.monic(f));
  auto finish = [&](std::vector<Poly<K>> gens) {
    if (detail::has_unit_head(gens)) {
      B.trace.push_back({MultiIndex(R.dim()), "unit leading term -> basis {1}"});
      gens = {R.one()};
    }
    B.generators = detail::local_minimize(R, gens, d, opt);
    if (!B.generators.empty()) B.multiplicative = multiplicative_multiset(d, B.leading_exponents());
    B.strength = detail::strength_of(B.generators);
    return B;
  };
  if (detail::has_unit_head(H)) return finish(H);
  H = detail::mora_autoreduce(R, std::move(H), d, opt);
  std::size_t inserted = 0;
  while (!H.empty() && !detail::has_unit_head(H)) {
    const auto mult = multiplicative_multiset(d, detail::leading_exponents(H));
    bool grew = false;
    for (const auto& c : detail::prolongations(R, H, mult)) {
      Poly<K> p = R.mul_term(CoeffTraits<K>::one(), MultiIndex::unit(R.dim(), c.var), H[c.gen]);
      auto m = mora_normal_form(R, p, H, d, &mult, opt);
      if (m.remainder.is_zero()) continue;
      Poly<K> h = R.monic(m.remainder);
      B.trace.push_back({c.le, "prolong " + R.names()[c.var] + " * g" + std::to_string(c.gen + 1) +
                                   " -> insert " + R.mono_str(h.le())});
      B.added.push_back(h);
      H.push_back(std::move(h));
      grew = true;
      break;
    }
    if (!grew) break;
    if (++inserted > caps.insertions)
      throw StepCapExceeded("local completion exceeded the insertion cap", detail::leading_exponents(H),
                            detail::leading_exponents(B.added));
    H = detail::mora_autoreduce(R, std::move(H), d, opt);
  }
  return finish(std::move(H));
}

struct HomogenizationOptions {
  /// Janet only: replace g by h*f whenever le(g) = le(f) + 1_0.
  bool strong_janet = false;
  /// Pad commutation tails with powers of h (otherwise h is merely central).
  bool homogenize_relations = true;
};

/// Completion for a semigroup order through homogenisation: complete the
/// homogenised generators for the lifted order and division, then set h = 1.
template <class K>
InvolutiveBasis<K> complete_via_homogenization(const Ring<K>& R, const std::vector<Poly<K>>& F, const Division& d,
                                               const CompletionCaps& caps = {},
                                               const HomogenizationOptions& opt = {}) {
  static_assert(CoeffTraits<K>::is_field, "complete_via_homogenization needs field coefficients");
  if (opt.strong_janet && d.kind != Division::Kind::Janet)
    throw std::invalid_argument("the strong variant needs the Janet division");
  if (R.homogenized()) throw std::invalid_argument("ring is already homogenised");
  Ring<K> hr(R.algebra_ptr(), lift_order(R.order()), true, opt.homogenize_relations);
  const Division hd = d.lift();
  std::vector<Poly<K>> Ft;
  for (const auto& f : F)
    if (!f.is_zero()) Ft.push_back(homogenize(hr, f));

  InvolutiveBasis<K> hb;
  if (!opt.strong_janet) {
    hb = complete(hr, Ft, hd, caps);
  } else {
    hb.division = hd;
    std::vector<Poly<K>> H = prepare_generators(hr, Ft, hd, caps);
    std::size_t inserted = 0;
    while (!H.empty()) {
      const auto mult = multiplicative_multiset(hd, detail::leading_exponents(H));
      bool grew = false;
      for (const auto& c : detail::prolongations(hr, H, mult)) {
        Poly<K> p = hr.mul_term(CoeffTraits<K>::one(), MultiIndex::unit(hr.dim(), c.var), H[c.gen]);
        if (c.var == 0) {
          std::optional<std::size_t> twin;
          for (std::size_t m = 0; m < H.size(); ++m)
            if (H[m].le() == c.le) twin = m;
          Poly<K> x0f = hr.monic(p);
          if (twin && H[*twin] != x0f) {
            Poly<K> old = H[*twin];
            H.erase(H.begin() + static_cast<std::ptrdiff_t>(*twin));
            H.push_back(x0f);
            hb.trace.push_back({c.le, "swap: replace generator by " + hr.names()[0] + " * g" +
                                          std::to_string(c.gen + 1)});
            auto rep = involutive_normal_form(hr, old, H, hd, NFMode::HeadOnly, nullptr, caps.nf_terms);
            if (!rep.remainder.is_zero()) {
              Poly<K> h = hr.monic(rep.remainder);
              hb.trace.push_back({h.le(), "reinsert " + hr.mono_str(h.le())});
              hb.added.push_back(h);
              H.push_back(std::move(h));
            }
            grew = true;
            break;
          }
        }
        auto rep = involutive_normal_form(hr, p, H, hd, NFMode::HeadOnly, &mult, caps.nf_terms);
        if (rep.remainder.is_zero()) continue;
        Poly<K> h = hr.monic(rep.remainder);
        hb.trace.push_back({c.le, "prolong " + hr.names()[c.var] + " * g" + std::to_string(c.gen + 1) +
                                      " -> insert " + hr.mono_str(h.le())});
        hb.added.push_back(h);
        H.push_back(std::move(h));
        grew = true;
        break;
      }
      if (!grew) break;
      if (++inserted > caps.insertions)
        throw StepCapExceeded("homogenised completion exceeded the insertion cap", detail::leading_exponents(H));
      H = involutive_head_autoreduce(hr, std::move(H), hd, caps.nf_terms);
      for (auto& h : H) h = hr.monic(h);
    }
    hb.generators = std::move(H);
    if (!hb.generators.empty()) hb.multiplicative = multiplicative_multiset(hd, hb.leading_exponents());
  }

  InvolutiveBasis<K> out;
  out.division = d;
  out.homogeneous_size = hb.generators.size();
  out.trace = hb.trace;
  for (const auto& a : hb.added) out.added.push_back(R.monic(dehomogenize(R, a)));
  for (std::size_t k = 0; k < hb.generators.size(); ++k) {
    Poly<K> g = R.monic(dehomogenize(R, hb.generators[k]));
    if (std::find(out.generators.begin(), out.generators.end(), g) != out.generators.end()) continue;
    out.generators.push_back(std::move(g));
    out.multiplicative.push_back(static_cast<IndexSet>(hb.multiplicative[k] >> 1));
  }
  out.strength = detail::strength_of(out.generators);
  return out;
}

}  // namespace invol

#endif
