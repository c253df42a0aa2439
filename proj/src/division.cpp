#include "invol/division.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace invol {

std::string index_set_str(IndexSet s, std::size_t n, bool zero_based) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!has_index(s, i)) continue;
    if (!first) out += ',';
    out += std::to_string(zero_based ? i : i + 1);
    first = false;
  }
  return out + "}";
}

std::string Division::str() const {
  std::string s = kind == Kind::Janet ? "janet" : "pommaret";
  return lifted ? "lifted " + s : s;
}

Division parse_division(const std::string& name) {
  if (name == "janet") return Division::janet();
  if (name == "pommaret") return Division::pommaret();
  throw std::invalid_argument("unknown division '" + name + "'");
}

IndexSet pommaret_multiplicative(const MultiIndex& nu) {
  auto c = nu.cls();
  if (!c) return all_indices(nu.size());
  return all_indices(*c + 1);
}

namespace {

void check_set(const std::vector<MultiIndex>& N) {
  if (N.empty()) throw std::invalid_argument("empty multi-index set");
  for (const auto& m : N) check_same_dim(m, N.front());
}

void check_distinct(const std::vector<MultiIndex>& N) {
  std::unordered_set<MultiIndex, MultiIndexHash> seen;
  for (const auto& m : N)
    if (!seen.insert(m).second) throw std::invalid_argument("duplicate element " + m.str());
}

// Lifted Pommaret: x_0 is renumbered to come after every other variable.
IndexSet lifted_pommaret(const MultiIndex& nu) {
  const std::size_t n1 = nu.size();
  for (std::size_t i = 1; i < n1; ++i)
    if (nu[i]) return all_indices(i + 1) & ~IndexSet{1};
  return all_indices(n1);
}

}  // namespace

std::vector<IndexSet> janet_multiplicative_sweep(const std::vector<MultiIndex>& N) {
  check_set(N);
  check_distinct(N);
  const std::size_t n = N.front().size();
  // Descending lex order: compare from the last entry.
  std::vector<std::size_t> idx(N.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto lexgt = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = n; i-- > 0;)
      if (N[a][i] != N[b][i]) return N[a][i] > N[b][i];
    return false;
  };
  std::sort(idx.begin(), idx.end(), lexgt);
  std::vector<IndexSet> out(N.size());
  IndexSet M = all_indices(n);
  std::size_t p1 = n - 1;
  out[idx[0]] = M;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const MultiIndex& prev = N[idx[j - 1]];
    const MultiIndex& cur = N[idx[j]];
    std::size_t p2 = 0;
    for (std::size_t i = n; i-- > 0;)
      if (prev[i] != cur[i]) {
        p2 = i;
        break;
      }
    M &= ~(IndexSet{1} << p2);
    if (p1 < p2)
      for (std::size_t i = p1; i < p2; ++i) M |= IndexSet{1} << i;
    out[idx[j]] = M;
    p1 = p2;
  }
  return out;
}

std::vector<IndexSet> janet_multiplicative_direct(const std::vector<MultiIndex>& N) {
  check_set(N);
  const std::size_t n = N.front().size();
  std::vector<IndexSet> out(N.size(), 0);
  for (std::size_t a = 0; a < N.size(); ++a) {
    for (std::size_t k = 0; k < n; ++k) {
      MultiIndex::value_type mx = 0;
      for (const auto& mu : N) {
        bool same_class = true;
        for (std::size_t i = k + 1; i < n && same_class; ++i) same_class = mu[i] == N[a][i];
        if (same_class) mx = std::max(mx, mu[k]);
      }
      if (N[a][k] == mx) out[a] |= IndexSet{1} << k;
    }
  }
  return out;
}

namespace {

std::vector<IndexSet> lifted_assignment(const Division& d, const std::vector<MultiIndex>& N) {
  if (d.kind == Division::Kind::Pommaret) {
    std::vector<IndexSet> out;
    for (const auto& m : N) out.push_back(lifted_pommaret(m));
    return out;
  }
  std::vector<MultiIndex> proj;
  MultiIndex::value_type mx0 = 0;
  for (const auto& m : N) {
    if (m.size() < 2) throw DimensionError("lifted division needs at least two entries");
    proj.push_back(m.drop_front());
    mx0 = std::max(mx0, m[0]);
  }
  auto base = janet_multiplicative_direct(proj);
  std::vector<IndexSet> out(N.size());
  for (std::size_t a = 0; a < N.size(); ++a)
    out[a] = (base[a] << 1) | (N[a][0] == mx0 ? IndexSet{1} : IndexSet{0});
  return out;
}

}  // namespace

std::vector<IndexSet> multiplicative(const Division& d, const std::vector<MultiIndex>& N) {
  check_set(N);
  check_distinct(N);
  return multiplicative_multiset(d, N);
}

std::vector<IndexSet> multiplicative_multiset(const Division& d, const std::vector<MultiIndex>& N) {
  check_set(N);
  if (d.lifted) return lifted_assignment(d, N);
  if (d.kind == Division::Kind::Pommaret) {
    std::vector<IndexSet> out;
    for (const auto& m : N) out.push_back(pommaret_multiplicative(m));
    return out;
  }
  std::unordered_set<MultiIndex, MultiIndexHash> seen;
  bool distinct = true;
  for (const auto& m : N) distinct = distinct && seen.insert(m).second;
  return distinct ? janet_multiplicative_sweep(N) : janet_multiplicative_direct(N);
}

bool involutively_divides(const MultiIndex& nu, IndexSet mult, const MultiIndex& mu) {
  check_same_dim(nu, mu);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] > mu[i]) return false;
    if (nu[i] < mu[i] && !has_index(mult, i)) return false;
  }
  return true;
}

bool involutively_divides(const Division& d, const std::vector<MultiIndex>& N,
                          const MultiIndex& nu, const MultiIndex& mu) {
  auto it = std::find(N.begin(), N.end(), nu);
  if (it == N.end()) throw std::invalid_argument(nu.str() + " is not an element of the set");
  auto mult = multiplicative(d, N);
  return involutively_divides(nu, mult[static_cast<std::size_t>(it - N.begin())], mu);
}

std::optional<std::size_t> involutive_divisor(const std::vector<MultiIndex>& N,
                                              const std::vector<IndexSet>& mult,
                                              const MultiIndex& mu, const TermOrder& order) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < N.size(); ++i) {
    if (!involutively_divides(N[i], mult[i], mu)) continue;
    if (!best || order.less(N[i], N[*best])) best = i;
  }
  return best;
}

std::optional<std::size_t> involutive_divisor(const Division& d, const std::vector<MultiIndex>& N,
                                              const MultiIndex& mu,
                                              const std::optional<TermOrder>& order) {
  if (N.empty()) return std::nullopt;
  auto mult = multiplicative(d, N);
  TermOrder o = order ? *order : TermOrder::degrevlex(N.front().size());
  return involutive_divisor(N, mult, mu, o);
}

std::vector<MultiIndex> autoreduce_monomial(const Division& d, std::vector<MultiIndex> N) {
  if (N.empty()) return N;
  bool changed = true;
  while (changed) {
    changed = false;
    auto mult = multiplicative(d, N);
    for (std::size_t a = 0; a < N.size() && !changed; ++a)
      for (std::size_t b = 0; b < N.size(); ++b) {
        if (a == b) continue;
        if (involutively_divides(N[b], mult[b], N[a])) {
          N.erase(N.begin() + static_cast<std::ptrdiff_t>(a));
          changed = true;
          break;
        }
      }
  }
  return N;
}

}  // namespace invol
