#include "invol/validate.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace invol {

namespace {

using Acc = std::map<MultiIndex, mpq_class, MultiIndexKeyLess>;

RTerms to_terms(const Acc& acc) {
  RTerms out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.push_back({e, c});
  return out;
}

/// (sum c_k x^a_k) * x^lam
RTerms times_right(MonomialMultiplier& m, const RTerms& f, const MultiIndex& lam) {
  Acc acc;
  for (const auto& [e, c] : f)
    for (const auto& [e2, c2] : m.product(e, lam)) acc[e2] += c * c2;
  return to_terms(acc);
}

/// x^mu * (sum c_k x^a_k)
RTerms times_left(MonomialMultiplier& m, const MultiIndex& mu, const RTerms& f) {
  Acc acc;
  for (const auto& [e, c] : f)
    for (const auto& [e2, c2] : m.product(mu, e)) acc[e2] += c * c2;
  return to_terms(acc);
}

}  // namespace

std::string ValidationReport::str() const {
  std::string s;
  s += "axiom-iii: " + std::string(axiom_iii ? "pass" : "FAIL " + axiom_iii_failure) + "\n";
  s += "associativity: " + std::string(associative ? "pass" : "FAIL " + associativity_failure) + "\n";
  s += "coefficient-maps: " + std::string(coefficient_maps ? "trivial" : "FAIL") + "\n";
  s += "centred: " + std::string(centred ? "yes" : "no") + "\n";
  s += "checked: " + std::to_string(checked_pairs) + " pairs, " + std::to_string(checked_triples) + " triples\n";
  return s;
}

ValidationReport validate(const std::shared_ptr<const Algebra>& alg, const TermOrder& order,
                          std::uint64_t degree_cap, std::uint64_t seed, std::size_t triples) {
  ValidationReport rep;
  rep.centred = alg->centred();
  if (order.dim() != alg->dim() || order.lifted()) {
    rep.axiom_iii = false;
    rep.axiom_iii_failure = "order dimension does not match the algebra";
    return rep;
  }
  MonomialMultiplier m(alg);
  const auto monos = monomials_up_to_degree(alg->dim(), degree_cap);
  for (const auto& mu : monos) {
    for (const auto& nu : monos) {
      ++rep.checked_pairs;
      const RTerms& p = m.product(mu, nu);
      const MultiIndex target = mu + nu;
      const std::pair<MultiIndex, mpq_class>* lead = nullptr;
      for (const auto& t : p)
        if (!lead || order.compare(t.first, lead->first) > 0) lead = &t;
      if (!lead || lead->first != target || lead->second == 0) {
        rep.axiom_iii = false;
        rep.axiom_iii_failure = "le(x^" + mu.str() + " * x^" + nu.str() + ") = " +
                                (lead ? lead->first.str() : std::string("none")) + ", expected " + target.str();
        break;
      }
    }
    if (!rep.axiom_iii) break;
  }
  const auto small = monomials_up_to_degree(alg->dim(), std::min<std::uint64_t>(degree_cap, 3));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  for (std::size_t t = 0; t < triples && rep.associative; ++t) {
    const MultiIndex a = small[pick(rng)], b = small[pick(rng)], c = small[pick(rng)];
    ++rep.checked_triples;
    RTerms lhs = times_right(m, m.product(a, b), c);
    RTerms rhs = times_left(m, a, m.product(b, c));
    if (lhs != rhs) {
      rep.associative = false;
      rep.associativity_failure = "(x^" + a.str() + " * x^" + b.str() + ") * x^" + c.str();
    }
  }
  return rep;
}

}  // namespace invol
