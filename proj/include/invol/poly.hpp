#ifndef INVOL_POLY_HPP
#define INVOL_POLY_HPP

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invol/algebra.hpp"
#include "invol/coeff.hpp"
#include "invol/expr.hpp"
#include "invol/multiindex.hpp"
#include "invol/order.hpp"

namespace invol {

template <class K>
struct Term {
  MultiIndex e;
  K c;
  bool operator==(const Term& o) const { return e == o.e && c == o.c; }
};

/// Sparse polynomial; terms strictly descending under the ring's order,
/// no zero coefficients. The empty term list is the zero polynomial.
template <class K>
struct Poly {
  std::vector<Term<K>> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  const MultiIndex& le() const {
    if (terms.empty()) throw std::domain_error("leading exponent of the zero polynomial");
    return terms.front().e;
  }
  const K& lc() const {
    if (terms.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return terms.front().c;
  }
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms) d = std::max(d, t.e.degree());
    return d;
  }
  bool operator==(const Poly& o) const { return terms == o.terms; }
  bool operator!=(const Poly& o) const { return !(terms == o.terms); }
};

/// A solvable algebra together with a term order and a coefficient domain.
/// With `homogenized` set, position 0 carries a central variable h and the
/// order must be lifted. With `homogenize_relations` the commutation tails are
/// padded with powers of h so that products of homogeneous elements stay
/// homogeneous; otherwise h is only adjoined as a central variable.
/// Memo caches make a Ring thread-confined.
template <class K>
class Ring {
public:
  using Traits = CoeffTraits<K>;
  using P = Poly<K>;

  Ring(std::shared_ptr<const Algebra> alg, TermOrder order, bool homogenized = false,
       bool homogenize_relations = true)
      : alg_(std::move(alg)), order_(std::move(order)), homog_(homogenized),
        pad_(homogenized && homogenize_relations) {
    if (homog_ != order_.lifted())
      throw std::invalid_argument("homogenised rings need a lifted order and vice versa");
    if (order_.base_dim() != alg_->dim()) throw DimensionError("order and algebra dimensions differ");
    if (pad_ && alg_->max_tail_degree() > 2)
      throw AlgebraError("commutation tails of degree above 2 cannot be homogenised");
    mult_ = std::make_shared<MonomialMultiplier>(alg_);
    names_.clear();
    if (homog_) {
      std::string h = "h";
      while (alg_->index_of(h) >= 0) h += "0";
      names_.push_back(h);
    }
    for (const auto& s : alg_->names()) names_.push_back(s);
  }

  const Algebra& algebra() const { return *alg_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return alg_; }
  const TermOrder& order() const { return order_; }
  std::size_t dim() const { return names_.size(); }
  bool homogenized() const { return homog_; }
  bool homogenized_relations() const { return pad_; }
  const std::vector<std::string>& names() const { return names_; }
  int cmp(const MultiIndex& a, const MultiIndex& b) const { return order_.compare(a, b); }
  bool commutative() const { return alg_->is_commutative(); }
  /// Same algebra and coefficients under a different order.
  Ring with_order(const TermOrder& o) const { return Ring(alg_, o, o.lifted(), pad_ || !o.lifted()); }

  P zero() const { return P{}; }
  P constant(const K& c) const { return monomial(MultiIndex(dim()), c); }
  P one() const { return constant(Traits::one()); }
  P monomial(const MultiIndex& e, const K& c) const {
    if (e.size() != dim()) throw DimensionError("monomial dimension mismatch");
    P p;
    if (!Traits::is_zero(c)) p.terms.push_back({e, c});
    return p;
  }
  P variable(std::size_t i) const { return monomial(MultiIndex::unit(dim(), i), Traits::one()); }

  /// Sort descending and merge equal exponents.
  P normalize(std::vector<Term<K>> ts) const {
    std::sort(ts.begin(), ts.end(), [&](const Term<K>& a, const Term<K>& b) { return cmp(a.e, b.e) > 0; });
    P out;
    for (auto& t : ts) {
      if (!out.terms.empty() && out.terms.back().e == t.e) {
        out.terms.back().c += t.c;
        if (Traits::is_zero(out.terms.back().c)) out.terms.pop_back();
      } else if (!Traits::is_zero(t.c)) {
        out.terms.push_back(std::move(t));
      }
    }
    return out;
  }

  /// Re-sort a polynomial produced under another order of the same dimension.
  P resort(const P& f) const { return normalize(f.terms); }

  P add(const P& f, const P& g) const { return merge(f, g, false); }
  P sub(const P& f, const P& g) const { return merge(f, g, true); }
  P neg(const P& f) const {
    P out = f;
    for (auto& t : out.terms) t.c = K(-t.c);
    return out;
  }
  P scale(const K& c, const P& f) const {
    if (Traits::is_zero(c)) return P{};
    P out;
    out.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
      K v = c * t.c;
      if (!Traits::is_zero(v)) out.terms.push_back({t.e, std::move(v)});
    }
    return out;
  }
  P monic(const P& f) const {
    static_assert(Traits::is_field, "monic normalisation needs a field");
    if (f.is_zero()) return f;
    return scale(Traits::inverse(f.lc()), f);
  }

  /// Coefficient-weighted product x^mu * x^nu.
  const std::vector<Term<K>>& mono(const MultiIndex& mu, const MultiIndex& nu) const {
    auto key = std::make_pair(mu, nu);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<Term<K>> out;
    if (homog_) {
      const MultiIndex a = mu.drop_front(), b = nu.drop_front();
      const auto total = a.degree() + b.degree();
      for (const auto& [lam, c] : mult_->product(a, b)) {
        if (pad_ && lam.degree() > total) throw AlgebraError("product raises the degree; cannot homogenise");
        auto pad = static_cast<MultiIndex::value_type>(mu[0] + nu[0] + (pad_ ? total - lam.degree() : 0));
        out.push_back({lam.prepend(pad), Traits::from_rational(c)});
      }
    } else {
      for (const auto& [lam, c] : mult_->product(mu, nu)) out.push_back({lam, Traits::from_rational(c)});
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

  /// c x^mu * g
  P mul_term(const K& c, const MultiIndex& mu, const P& g) const {
    if (Traits::is_zero(c) || g.is_zero()) return P{};
    if (commutative()) {
      // Shifting by mu keeps the order of the terms.
      P out;
      out.terms.reserve(g.terms.size());
      for (const auto& t : g.terms) {
        K v = c * t.c;
        if (!Traits::is_zero(v)) out.terms.push_back({t.e + mu, std::move(v)});
      }
      return out;
    }
    std::unordered_map<MultiIndex, K, MultiIndexHash> acc;
    for (const auto& t : g.terms) {
      K ct = c * t.c;
      for (const auto& r : mono(mu, t.e)) {
        auto [pos, fresh] = acc.try_emplace(r.e, ct * r.c);
        if (!fresh) pos->second += ct * r.c;
      }
    }
    std::vector<Term<K>> ts;
    ts.reserve(acc.size());
    for (auto& [e, v] : acc)
      if (!Traits::is_zero(v)) ts.push_back({e, std::move(v)});
    return normalize(std::move(ts));
  }

  /// f * x^mu
  P mul_right_term(const P& f, const MultiIndex& mu) const {
    std::vector<Term<K>> ts;
    for (const auto& t : f.terms)
      for (const auto& r : mono(t.e, mu)) ts.push_back({r.e, K(t.c * r.c)});
    return normalize(std::move(ts));
  }

  P mul(const P& f, const P& g) const {
    P out;
    for (const auto& t : f.terms) out = add(out, mul_term(t.c, t.e, g));
    return out;
  }

  /// f - c x^mu * g
  P sub_mul(const P& f, const K& c, const MultiIndex& mu, const P& g) const {
    return sub(f, mul_term(c, mu, g));
  }

  // ---- printing and parsing ----

  std::string mono_str(const MultiIndex& e) const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += names_[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }

  std::string str(const P& f) const {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms) {
      bool neg = negative(t.c);
      K mag = neg ? K(-t.c) : t.c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool constant_term = t.e.is_zero();
      const bool unit = mag == Traits::one();
      if (constant_term) {
        out += coeff_str(mag);
      } else {
        if (!unit) out += coeff_str(mag) + "*";
        out += mono_str(t.e);
      }
    }
    return out;
  }

  /// Evaluate an expression; '*' is the algebra product. For qpoly
  /// coefficients the identifier `t` denotes the coefficient parameter.
  P from_expr(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Number:
        try {
          return constant(Traits::from_rational(e.value));
        } catch (const CoefficientError& err) {
          throw ParseError(err.what(), e.line, e.col);
        }
      case Expr::Kind::Ident: {
        auto it = std::find(names_.begin(), names_.end(), e.name);
        if (it != names_.end()) return variable(static_cast<std::size_t>(it - names_.begin()));
        if constexpr (std::is_same_v<K, QPoly>) {
          if (e.name == "t") return constant(QPoly::t());
        }
        throw ParseError("unknown identifier '" + e.name + "'", e.line, e.col);
      }
      case Expr::Kind::Neg: return neg(from_expr(*e.kids[0]));
      case Expr::Kind::Add: return add(from_expr(*e.kids[0]), from_expr(*e.kids[1]));
      case Expr::Kind::Sub: return sub(from_expr(*e.kids[0]), from_expr(*e.kids[1]));
      case Expr::Kind::Mul: return mul(from_expr(*e.kids[0]), from_expr(*e.kids[1]));
      case Expr::Kind::Pow: {
        P base = from_expr(*e.kids[0]);
        P r = one();
        for (unsigned k = 0; k < e.exponent; ++k) r = mul(r, base);
        return r;
      }
    }
    return P{};
  }

  P parse(const std::string& text, int line = 1, int col0 = 1) const {
    return from_expr(*parse_expr(text, line, col0));
  }

  static bool negative(const K& c) {
    if constexpr (std::is_same_v<K, Rational> || std::is_same_v<K, Integer>) {
      return sgn(c) < 0;
    } else if constexpr (std::is_same_v<K, QPoly>) {
      return c.degree() == 0 && sgn(c.lead()) < 0;
    } else {
      return false;
    }
  }

  static std::string coeff_str(const K& c) {
    std::string s = Traits::to_string(c);
    return Traits::atomic(c) ? s : "(" + s + ")";
  }

  const MonomialMultiplier& multiplier() const { return *mult_; }

private:
  P merge(const P& f, const P& g, bool subtract) const {
    P out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
      int c;
      if (i == f.terms.size()) {
        c = -1;
      } else if (j == g.terms.size()) {
        c = 1;
      } else {
        c = cmp(f.terms[i].e, g.terms[j].e);
      }
      if (c > 0) {
        out.terms.push_back(f.terms[i++]);
      } else if (c < 0) {
        const auto& t = g.terms[j++];
        out.terms.push_back({t.e, subtract ? K(-t.c) : t.c});
      } else {
        K v = subtract ? K(f.terms[i].c - g.terms[j].c) : K(f.terms[i].c + g.terms[j].c);
        if (!Traits::is_zero(v)) out.terms.push_back({f.terms[i].e, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  struct PairHash {
    std::size_t operator()(const std::pair<MultiIndex, MultiIndex>& p) const {
      return p.first.hash() * 1000003u ^ p.second.hash();
    }
  };

  std::shared_ptr<const Algebra> alg_;
  TermOrder order_;
  bool homog_ = false;
  bool pad_ = false;
  std::vector<std::string> names_;
  std::shared_ptr<MonomialMultiplier> mult_;
  mutable std::unordered_map<std::pair<MultiIndex, MultiIndex>, std::vector<Term<K>>, PairHash> cache_;
};

/// Leading exponent, coefficient and monomial of a non-zero polynomial.
template <class K>
struct LeadingData {
  MultiIndex exponent;
  K coefficient;
  Poly<K> monomial;
};

template <class K>
LeadingData<K> leading_data(const Ring<K>& R, const Poly<K>& f) {
  if (f.is_zero()) throw std::domain_error("leading data of the zero polynomial");
  return {f.le(), f.lc(), R.monomial(f.le(), f.lc())};
}

/// f^(h) = sum c_mu h^(q - |mu|) x^mu with q = deg f.
template <class K>
Poly<K> homogenize(const Ring<K>& hr, const Poly<K>& f) {
  if (!hr.homogenized()) throw std::invalid_argument("target ring is not homogenised");
  const auto q = f.degree();
  std::vector<Term<K>> ts;
  for (const auto& t : f.terms)
    ts.push_back({t.e.prepend(static_cast<MultiIndex::value_type>(q - t.e.degree())), t.c});
  return hr.normalize(std::move(ts));
}

/// Set h = 1 and sort under the base order.
template <class K>
Poly<K> dehomogenize(const Ring<K>& base, const Poly<K>& f) {
  if (base.homogenized()) throw std::invalid_argument("target ring must not be homogenised");
  std::vector<Term<K>> ts;
  for (const auto& t : f.terms) ts.push_back({t.e.drop_front(), t.c});
  return base.normalize(std::move(ts));
}

template <class K>
bool is_homogeneous(const Poly<K>& f) {
  for (const auto& t : f.terms)
    if (t.e.degree() != f.terms.front().e.degree()) return false;
  return true;
}

}  // namespace invol

#endif
