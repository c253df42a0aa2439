#include "invol/mono_completion.hpp"

#include <algorithm>
#include <unordered_set>

#include "invol/order.hpp"

namespace invol {

std::string strength_str(Strength s) {
  switch (s) {
    case Strength::Weak: return "weak";
    case Strength::Strong: return "strong";
    case Strength::NotABasis: return "not-a-basis";
  }
  return "?";
}

bool in_involutive_span(const std::vector<MultiIndex>& N, const std::vector<IndexSet>& mult,
                        const MultiIndex& mu) {
  for (std::size_t i = 0; i < N.size(); ++i)
    if (involutively_divides(N[i], mult[i], mu)) return true;
  return false;
}

bool in_span(const std::vector<MultiIndex>& N, const MultiIndex& mu) {
  for (const auto& nu : N)
    if (divides(nu, mu)) return true;
  return false;
}

namespace {

void sort_unique(std::vector<MultiIndex>& v) {
  if (v.empty()) return;
  TermOrder o = TermOrder::degrevlex(v.front().size());
  std::sort(v.begin(), v.end(), [&](const MultiIndex& a, const MultiIndex& b) { return o.less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<MultiIndex> local_obstructions(const Division& d, const std::vector<MultiIndex>& N) {
  auto mult = multiplicative(d, N);
  std::vector<MultiIndex> S;
  for (std::size_t a = 0; a < N.size(); ++a)
    for (std::size_t j = 0; j < N[a].size(); ++j) {
      if (has_index(mult[a], j)) continue;
      MultiIndex m = N[a];
      m.increment(j);
      if (!in_involutive_span(N, mult, m)) S.push_back(m);
    }
  sort_unique(S);
  return S;
}

MonomialBasisResult complete_monomial(const Division& d, const std::vector<MultiIndex>& N,
                                      const MonoCompletionOptions& opt) {
  if (N.empty()) throw std::invalid_argument("empty multi-index set");
  std::vector<MultiIndex> cur;
  {
    std::unordered_set<MultiIndex, MultiIndexHash> seen;
    for (const auto& m : N) {
      check_same_dim(m, N.front());
      if (seen.insert(m).second) cur.push_back(m);
    }
  }
  MonomialBasisResult res;
  std::size_t steps = 0;
  while (true) {
    auto S = local_obstructions(d, cur);
    if (S.empty()) break;
    std::vector<MultiIndex> minimal;
    for (const auto& s : S) {
      bool has_proper_divisor = false;
      for (const auto& t : S)
        if (t != s && divides(t, s)) {
          has_proper_divisor = true;
          break;
        }
      if (!has_proper_divisor) minimal.push_back(s);
    }
    // S is sorted ascending, so minimal is as well.
    const MultiIndex& pick = opt.reverse_tie_break ? minimal.back() : minimal.front();
    if (++steps > opt.step_cap)
      throw StepCapExceeded("monomial completion exceeded " + std::to_string(opt.step_cap) +
                                " steps",
                            cur, res.added);
    cur.push_back(pick);
    res.added.push_back(pick);
    if (opt.autoreduce_each_step) cur = autoreduce_monomial(d, cur);
  }
  cur = autoreduce_monomial(d, cur);
  res.generators = cur;
  res.multiplicative = multiplicative(d, cur);
  res.strength = Strength::Strong;
  return res;
}

std::vector<MultiIndex> janet_box_completion(const std::vector<MultiIndex>& N) {
  if (N.empty()) throw std::invalid_argument("empty multi-index set");
  MultiIndex mu = lcm(N);
  std::vector<MultiIndex> out;
  MultiIndex cur(mu.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == mu.size()) {
      if (in_span(N, cur)) out.push_back(cur);
      return;
    }
    for (MultiIndex::value_type k = 0; k <= mu[i]; ++k) {
      cur.set(i, k);
      self(self, i + 1);
    }
    cur.set(i, 0);
  };
  rec(rec, 0);
  sort_unique(out);
  return out;
}

PommaretIrreducibleResult pommaret_irreducible(std::size_t n,
                                               const std::vector<IrreducibleGenerator>& gens) {
  const std::size_t k = gens.size();
  if (k == 0 || k > n) throw std::invalid_argument("irreducible ideal needs 1..n generators");
  for (std::size_t j = 0; j < k; ++j) {
    if (gens[j].ell == 0) throw std::invalid_argument("exponents must be positive");
    if (gens[j].index < 1 || gens[j].index > n) throw std::invalid_argument("index out of range");
    if (j && gens[j].index <= gens[j - 1].index)
      throw std::invalid_argument("indices must be strictly increasing");
  }
  PommaretIrreducibleResult res;
  if (gens.back().index != n || gens.front().index != n - k + 1) return res;
  res.finite = true;
  // Position p (1-based) carries the generator exponent ell_{p-(n-k)}.
  auto ell_at = [&](std::size_t p) { return gens[p - (n - k) - 1].ell; };
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t ij = gens[j].index;
    MultiIndex cur(n);
    cur.set(ij - 1, gens[j].ell);
    auto rec = [&](auto&& self, std::size_t p) -> void {
      if (p > n) {
        res.basis.push_back(cur);
        return;
      }
      for (MultiIndex::value_type v = 0; v < ell_at(p); ++v) {
        cur.set(p - 1, v);
        self(self, p + 1);
      }
      cur.set(p - 1, 0);
    };
    rec(rec, ij + 1);
  }
  sort_unique(res.basis);
  return res;
}

namespace {

void require_pommaret_basis(const std::vector<MultiIndex>& N) {
  if (!local_obstructions(Division::pommaret(), N).empty())
    throw std::invalid_argument("input is not a Pommaret basis");
}

}  // namespace

std::vector<MultiIndex> pommaret_product_basis(const std::vector<MultiIndex>& N1,
                                               const std::vector<MultiIndex>& N2) {
  require_pommaret_basis(N1);
  require_pommaret_basis(N2);
  std::vector<MultiIndex> out;
  for (const auto& a : N1)
    for (const auto& b : N2) out.push_back(a + b);
  sort_unique(out);
  if (!local_obstructions(Division::pommaret(), out).empty())
    throw std::logic_error("product set is not locally involutive");
  return out;
}

std::vector<MultiIndex> pommaret_intersection_basis(const std::vector<MultiIndex>& N1,
                                                    const std::vector<MultiIndex>& N2) {
  require_pommaret_basis(N1);
  require_pommaret_basis(N2);
  std::vector<MultiIndex> out;
  for (const auto& a : N1)
    for (const auto& b : N2) out.push_back(lcm(a, b));
  sort_unique(out);
  if (!local_obstructions(Division::pommaret(), out).empty())
    throw std::logic_error("intersection set is not locally involutive");
  return out;
}

std::vector<MultiIndex> minimal_monomial_basis(const std::vector<MultiIndex>& N) {
  std::vector<MultiIndex> out;
  for (std::size_t i = 0; i < N.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < N.size() && !redundant; ++j) {
      if (i == j || !divides(N[j], N[i])) continue;
      // Strict divisor, or an equal element appearing earlier.
      redundant = N[j] != N[i] || j < i;
    }
    if (!redundant) out.push_back(N[i]);
  }
  std::sort(out.begin(), out.end(), MultiIndexKeyLess{});
  return out;
}

}  // namespace invol
