#include "invol/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "invol/coeff.hpp"

namespace invol {

namespace {

using Acc = std::unordered_map<MultiIndex, mpq_class, MultiIndexHash>;

RTerms finish(const Acc& acc) {
  RTerms out;
  for (const auto& [m, c] : acc)
    if (sgn(c) != 0) out.emplace_back(m, c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return MultiIndexKeyLess{}(a.first, b.first); });
  return out;
}

std::vector<std::string> default_names(const char* stem, std::size_t n, const char* const* small) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 3 && small ? std::string(small[i]) : stem + std::to_string(i + 1));
  return out;
}

const char* const kXYZ[] = {"x", "y", "z"};
const char* const kDXYZ[] = {"Dx", "Dy", "Dz"};

std::size_t max_index(const MultiIndex& m) {
  for (std::size_t i = m.size(); i-- > 0;)
    if (m[i]) return i;
  return 0;
}

// Commutative evaluation of an expression over the named variables.
Acc eval_commutative(const Expr& e, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  auto mul = [&](const Acc& a, const Acc& b) {
    Acc out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) out[ma + mb] += ca * cb;
    return out;
  };
  switch (e.kind) {
    case Expr::Kind::Number: return Acc{{MultiIndex(n), e.value}};
    case Expr::Kind::Ident: {
      auto it = std::find(names.begin(), names.end(), e.name);
      if (it == names.end()) throw ParseError("unknown variable '" + e.name + "'", e.line, e.col);
      return Acc{{MultiIndex::unit(n, static_cast<std::size_t>(it - names.begin())), 1}};
    }
    case Expr::Kind::Neg: {
      Acc a = eval_commutative(*e.kids[0], names);
      for (auto& [m, c] : a) c = -c;
      return a;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      Acc a = eval_commutative(*e.kids[0], names);
      Acc b = eval_commutative(*e.kids[1], names);
      for (const auto& [m, c] : b) a[m] += e.kind == Expr::Kind::Add ? c : mpq_class(-c);
      return a;
    }
    case Expr::Kind::Mul:
      return mul(eval_commutative(*e.kids[0], names), eval_commutative(*e.kids[1], names));
    case Expr::Kind::Pow: {
      Acc base = eval_commutative(*e.kids[0], names);
      Acc r{{MultiIndex(n), 1}};
      for (unsigned k = 0; k < e.exponent; ++k) r = mul(r, base);
      return r;
    }
  }
  return {};
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

}  // namespace

std::string family_name(Algebra::Family f) {
  switch (f) {
    case Algebra::Family::Commutative: return "commutative";
    case Algebra::Family::Weyl: return "weyl";
    case Algebra::Family::OreShift: return "ore-shift";
    case Algebra::Family::OreDifference: return "ore-difference";
    case Algebra::Family::Enveloping: return "enveloping";
    case Algebra::Family::QHeisenberg: return "qheisenberg";
    case Algebra::Family::Custom: return "custom";
  }
  return "?";
}

Algebra::Algebra(std::size_t n, Family f) : n_(n), family_(f), rel_(n * n) {
  if (n == 0 || n > kMaxDim) throw DimensionError("algebra dimension out of range");
}

void Algebra::set_rel(std::size_t i, std::size_t j, Relation r) {
  if (i <= j) throw AlgebraError("relations are stated for i > j");
  if (sgn(r.r) == 0) throw AlgebraError("commutation scalar must be non-zero");
  for (const auto& [m, c] : r.h)
    if (m.size() != n_) throw DimensionError("relation tail dimension mismatch");
  rel_[i * n_ + j] = std::move(r);
}

void Algebra::rename(const std::vector<std::string>& names) {
  if (names.size() != n_) throw AlgebraError("expected " + std::to_string(n_) + " variable names");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw AlgebraError("duplicate variable name '" + names[i] + "'");
  names_ = names;
}

int Algebra::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool Algebra::is_commutative() const {
  for (const auto& r : rel_)
    if (!r.trivial()) return false;
  return true;
}

std::uint64_t Algebra::max_tail_degree() const {
  std::uint64_t d = 0;
  for (const auto& r : rel_)
    for (const auto& [m, c] : r.h) d = std::max(d, m.degree());
  return d;
}

Algebra Algebra::commutative(std::size_t n) {
  Algebra a(n, Family::Commutative);
  a.names_ = default_names("x", n, kXYZ);
  a.description_ = "commutative " + std::to_string(n);
  return a;
}

Algebra Algebra::weyl(std::size_t n) {
  Algebra a(2 * n, Family::Weyl);
  a.names_ = default_names("x", n, kXYZ);
  auto d = default_names("D", n, kDXYZ);
  a.names_.insert(a.names_.end(), d.begin(), d.end());
  for (std::size_t k = 0; k < n; ++k) a.set_rel(n + k, k, Relation{1, {{MultiIndex(2 * n), 1}}});
  a.description_ = "weyl " + std::to_string(n);
  return a;
}

Algebra Algebra::ore_shift(std::size_t n) {
  Algebra a(2 * n, Family::OreShift);
  const char* const x1[] = {"x"};
  const char* const s1[] = {"S"};
  a.names_ = n == 1 ? std::vector<std::string>{x1[0]} : default_names("x", n, nullptr);
  auto s = n == 1 ? std::vector<std::string>{s1[0]} : default_names("S", n, nullptr);
  a.names_.insert(a.names_.end(), s.begin(), s.end());
  for (std::size_t k = 0; k < n; ++k)
    a.set_rel(n + k, k, Relation{1, {{MultiIndex::unit(2 * n, n + k), 1}}});
  a.description_ = "ore-shift " + std::to_string(n);
  return a;
}

Algebra Algebra::ore_difference(std::size_t n) {
  Algebra a(2 * n, Family::OreDifference);
  a.names_ = n == 1 ? std::vector<std::string>{"x"} : default_names("x", n, nullptr);
  auto e = n == 1 ? std::vector<std::string>{"E"} : default_names("E", n, nullptr);
  a.names_.insert(a.names_.end(), e.begin(), e.end());
  for (std::size_t k = 0; k < n; ++k)
    a.set_rel(n + k, k,
              Relation{1, {{MultiIndex::unit(2 * n, n + k), 1}, {MultiIndex(2 * n), 1}}});
  a.description_ = "ore-difference " + std::to_string(n);
  return a;
}

Algebra Algebra::enveloping(
    std::size_t n,
    const std::vector<std::vector<std::vector<std::pair<std::size_t, mpq_class>>>>& bracket,
    std::string label) {
  Algebra a(n, Family::Enveloping);
  a.names_ = default_names("x", n, nullptr);
  if (bracket.size() != n) throw AlgebraError("structure constant table has wrong size");
  // c[i][j][k] with antisymmetry filled in.
  std::vector<mpq_class> c(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> mpq_class& {
    return c[(i * n + j) * n + k];
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (bracket[i].size() < i) throw AlgebraError("structure constant table has wrong size");
    for (std::size_t j = 0; j < i; ++j)
      for (const auto& [k, v] : bracket[i][j]) {
        if (k >= n) throw AlgebraError("structure constant index out of range");
        at(i, j, k) += v;
        at(j, i, k) -= v;
      }
  }
  // Jacobi identity.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          mpq_class s = 0;
          for (std::size_t l = 0; l < n; ++l)
            s += at(j, k, l) * at(i, l, m) + at(k, i, l) * at(j, l, m) + at(i, j, l) * at(k, l, m);
          if (sgn(s) != 0) throw AlgebraError("structure constants violate the Jacobi identity");
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Relation r;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(at(i, j, k)) != 0) r.h.emplace_back(MultiIndex::unit(n, k), at(i, j, k));
      a.set_rel(i, j, std::move(r));
    }
  a.mora_subring_ = false;
  a.description_ = "enveloping " + label;
  return a;
}

Algebra Algebra::so3() {
  // [x2,x1] = -x3, [x3,x1] = x2, [x3,x2] = -x1
  std::vector<std::vector<std::vector<std::pair<std::size_t, mpq_class>>>> b(3);
  b[1] = {{{2, -1}}};
  b[2] = {{{1, 1}}, {{0, -1}}};
  return enveloping(3, b, "so3");
}

Algebra Algebra::q_heisenberg(const mpq_class& q) {
  if (sgn(q) == 0 || q == 1) throw AlgebraError("q must differ from 0 and 1");
  Algebra a(3, Family::QHeisenberg);
  a.names_ = {"delta", "tau", "xhat"};
  mpq_class qi = 1 / q;
  a.set_rel(1, 0, Relation{qi, {}});
  a.set_rel(2, 1, Relation{qi, {}});
  a.set_rel(2, 0, Relation{1, {{MultiIndex::unit(3, 1), -1}}});
  a.mora_subring_ = false;
  a.description_ = "qheisenberg " + q.get_str();
  return a;
}

Algebra Algebra::custom(const std::string& text, const std::string& label) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::vector<std::string> names;
  struct PendingRel {
    std::size_t i, j;
    ExprPtr rhs;
  };
  std::vector<PendingRel> rels;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "vars") {
      if (!names.empty()) throw ParseError("duplicate 'vars' line", lineno, 1);
      names.assign(tok.begin() + 1, tok.end());
      if (names.empty()) throw ParseError("no variables declared", lineno, 1);
      continue;
    }
    if (tok[0] == "rel") {
      if (names.empty()) throw ParseError("'rel' before 'vars'", lineno, 1);
      auto eq = line.find('=');
      if (eq == std::string::npos || tok.size() < 4) throw ParseError("expected 'rel a b = expr'", lineno, 1);
      auto lhs = split_ws(line.substr(0, eq));
      if (lhs.size() != 3) throw ParseError("expected two variables before '='", lineno, 1);
      auto find = [&](const std::string& v) {
        auto it = std::find(names.begin(), names.end(), v);
        if (it == names.end()) throw ParseError("unknown variable '" + v + "'", lineno, 1);
        return static_cast<std::size_t>(it - names.begin());
      };
      std::size_t i = find(lhs[1]), j = find(lhs[2]);
      if (i <= j)
        throw ParseError("relation must list the later variable first", lineno, 1);
      rels.push_back({i, j, parse_expr(line.substr(eq + 1), lineno, static_cast<int>(eq) + 2)});
      continue;
    }
    throw ParseError("unknown keyword '" + tok[0] + "'", lineno, 1);
  }
  if (names.empty()) throw AlgebraError("custom algebra declares no variables");
  Algebra a(names.size(), Family::Custom);
  a.rename(names);
  for (const auto& pr : rels) {
    Acc acc = eval_commutative(*pr.rhs, names);
    MultiIndex lead = MultiIndex::unit(names.size(), pr.i) + MultiIndex::unit(names.size(), pr.j);
    Relation r;
    r.r = 0;
    for (const auto& [m, c] : finish(acc)) {
      if (m == lead) {
        r.r = c;
      } else {
        r.h.emplace_back(m, c);
      }
    }
    if (sgn(r.r) == 0)
      throw AlgebraError("relation for " + names[pr.i] + " " + names[pr.j] +
                         " lacks the product term " + names[pr.j] + "*" + names[pr.i]);
    a.set_rel(pr.i, pr.j, std::move(r));
  }
  a.mora_subring_ = false;
  a.description_ = "custom " + label;
  return a;
}

MonomialMultiplier::MonomialMultiplier(std::shared_ptr<const Algebra> alg) : alg_(std::move(alg)) {}

const RTerms& MonomialMultiplier::product(const MultiIndex& mu, const MultiIndex& nu) {
  if (alg_->ore_pairs() > 0) {
    auto key = std::make_pair(mu, nu);
    auto it = ore_cache_.find(key);
    if (it != ore_cache_.end()) return it->second;
    return ore_cache_.emplace(key, product_ore(mu, nu)).first->second;
  }
  return rewrite(mu, nu);
}

const RTerms& MonomialMultiplier::product_rewriting(const MultiIndex& mu, const MultiIndex& nu) {
  return rewrite(mu, nu);
}

const RTerms& MonomialMultiplier::rewrite(const MultiIndex& mu, const MultiIndex& nu) {
  auto key = std::make_pair(mu, nu);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  check_same_dim(mu, nu);
  if (mu.size() != alg_->dim()) throw DimensionError("monomial dimension does not match algebra");
  Acc acc;
  const auto jmin = nu.cls();
  const std::size_t imax = max_index(mu);
  if (mu.is_zero() || !jmin || imax <= *jmin || alg_->is_commutative()) {
    acc[mu + nu] = 1;
  } else if (mu == MultiIndex::unit(mu.size(), imax)) {
    // x_i * x_j x^rest = r x_j * (x_i * x^rest) + h_ij * x^rest
    const std::size_t i = imax, j = *jmin;
    const Relation& rel = alg_->rel(i, j);
    MultiIndex rest = nu - MultiIndex::unit(nu.size(), j);
    const RTerms a = rewrite(mu, rest);
    const MultiIndex xj = MultiIndex::unit(nu.size(), j);
    for (const auto& [lam, c] : a)
      for (const auto& [kap, d] : rewrite(xj, lam)) acc[kap] += rel.r * c * d;
    for (const auto& [lam, c] : rel.h)
      for (const auto& [kap, d] : rewrite(lam, rest)) acc[kap] += c * d;
  } else {
    // x^mu = x^(mu - 1_i) * x_i with i the last variable present.
    const MultiIndex xi = MultiIndex::unit(mu.size(), imax);
    const MultiIndex head = mu - xi;
    const RTerms p = rewrite(xi, nu);
    for (const auto& [lam, c] : p)
      for (const auto& [kap, d] : rewrite(head, lam)) acc[kap] += c * d;
  }
  return cache_.emplace(key, finish(acc)).first->second;
}

namespace {

// p(x) -> p(x + 1)
QPoly shift(const QPoly& p) {
  QPoly out, xp1(std::vector<mpq_class>{1, 1}), pw(1);
  for (const auto& c : p.coeffs()) {
    out += QPoly(c) * pw;
    pw *= xp1;
  }
  return out;
}

QPoly derivative(const QPoly& p) {
  std::vector<mpq_class> c;
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) c.push_back(p.coeffs()[k] * static_cast<long>(k));
  return QPoly(std::move(c));
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

RTerms MonomialMultiplier::product_ore(const MultiIndex& mu, const MultiIndex& nu) const {
  const std::size_t p = alg_->ore_pairs();
  if (p == 0) throw AlgebraError("closed Ore form needs an Ore family algebra");
  check_same_dim(mu, nu);
  if (mu.size() != alg_->dim()) throw DimensionError("monomial dimension does not match algebra");
  const auto fam = alg_->family();
  auto sigma = [&](const QPoly& q) { return fam == Algebra::Family::Weyl ? q : shift(q); };
  auto delta = [&](const QPoly& q) {
    switch (fam) {
      case Algebra::Family::Weyl: return derivative(q);
      case Algebra::Family::OreDifference: return shift(q) - q;
      default: return QPoly();
    }
  };
  Acc acc{{MultiIndex(mu.size()), 1}};
  for (std::size_t k = 0; k < p; ++k) {
    const auto a = mu[k], m = mu[p + k], b = nu[k], c = nu[p + k];
    // D^m * x^b = sum_l C(m,l) sigma^l delta^(m-l)(x^b) D^l
    std::vector<mpq_class> xb(b + 1);
    xb[b] = 1;
    Acc local;
    for (unsigned l = 0; l <= m; ++l) {
      QPoly q(xb);
      for (unsigned s = 0; s < m - l; ++s) q = delta(q);
      for (unsigned s = 0; s < l; ++s) q = sigma(q);
      mpq_class bc(binom(m, l));
      for (std::size_t e = 0; e < q.coeffs().size(); ++e) {
        if (sgn(q.coeffs()[e]) == 0) continue;
        MultiIndex t(mu.size());
        t.set(k, a + static_cast<MultiIndex::value_type>(e));
        t.set(p + k, l + c);
        local[t] += bc * q.coeffs()[e];
      }
    }
    Acc next;
    for (const auto& [m1, c1] : acc)
      for (const auto& [m2, c2] : local)
        if (sgn(c2) != 0) next[m1 + m2] += c1 * c2;
    acc = std::move(next);
  }
  return finish(acc);
}

std::shared_ptr<Algebra> parse_algebra(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw AlgebraError("algebra: missing family");
  const std::string& f = tokens[0];
  auto count = [&]() -> std::size_t {
    if (tokens.size() != 2) throw AlgebraError("algebra " + f + ": expected one size argument");
    try {
      long v = std::stol(tokens[1]);
      if (v <= 0) throw AlgebraError("algebra size must be positive");
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw AlgebraError("algebra " + f + ": bad size '" + tokens[1] + "'");
    }
  };
  if (f == "commutative") return std::make_shared<Algebra>(Algebra::commutative(count()));
  if (f == "weyl") return std::make_shared<Algebra>(Algebra::weyl(count()));
  if (f == "ore-shift") return std::make_shared<Algebra>(Algebra::ore_shift(count()));
  if (f == "ore-difference") return std::make_shared<Algebra>(Algebra::ore_difference(count()));
  if (f == "enveloping") {
    if (tokens.size() != 2 || tokens[1] != "so3") throw AlgebraError("enveloping: only so3 is built in");
    return std::make_shared<Algebra>(Algebra::so3());
  }
  if (f == "qheisenberg") {
    if (tokens.size() != 2) throw AlgebraError("qheisenberg: expected q");
    mpq_class q;
    try {
      q = mpq_class(tokens[1]);
      q.canonicalize();
    } catch (const std::exception&) {
      throw AlgebraError("qheisenberg: bad q '" + tokens[1] + "'");
    }
    return std::make_shared<Algebra>(Algebra::q_heisenberg(q));
  }
  if (f == "custom") {
    if (tokens.size() != 2) throw AlgebraError("custom: expected a file name");
    std::ifstream in(tokens[1]);
    if (!in) throw AlgebraError("custom: cannot open '" + tokens[1] + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return std::make_shared<Algebra>(Algebra::custom(ss.str(), tokens[1]));
  }
  throw AlgebraError("unknown algebra family '" + f + "'");
}

}  // namespace invol
