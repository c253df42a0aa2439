#include "invol/order.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace invol {

TermOrder::TermOrder(Kind kind, std::size_t n) : kind_(kind), n_(n) {
  if (n == 0 || n > kMaxDim) throw DimensionError("order dimension out of range");
}

TermOrder TermOrder::deginvlex(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = n - i;
  return deglex(n).with_permutation(p);
}

TermOrder TermOrder::with_permutation(const std::vector<std::size_t>& perm_one_based) const {
  if (lifted_) throw std::logic_error("cannot modify a lifted order");
  if (perm_one_based.size() != n_) throw DimensionError("permutation length mismatch");
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> p(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t s = perm_one_based[i];
    if (s < 1 || s > n_ || seen[s - 1]) throw std::invalid_argument("not a permutation");
    seen[s - 1] = true;
    p[i] = s - 1;
  }
  TermOrder r = *this;
  bool identity = true;
  for (std::size_t i = 0; i < n_; ++i) identity = identity && p[i] == i;
  r.perm_ = identity ? std::vector<std::size_t>{} : p;
  return r;
}

TermOrder TermOrder::with_weight(const std::vector<mpq_class>& w) const {
  if (lifted_) throw std::logic_error("cannot modify a lifted order");
  if (w.size() != n_) throw DimensionError("weight length mismatch");
  TermOrder r = *this;
  r.weight_ = w;
  for (auto& x : r.weight_) x.canonicalize();
  mpz_class den = 1;
  for (const auto& x : r.weight_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  r.int_weight_.clear();
  for (const auto& x : r.weight_) {
    mpz_class v = x.get_num() * (den / x.get_den());
    if (!v.fits_slong_p()) throw std::overflow_error("weight vector too large");
    r.int_weight_.push_back(v.get_si());
  }
  return r;
}

int TermOrder::base_compare(const MultiIndex& mu, const MultiIndex& nu, std::size_t off) const {
  if (!int_weight_.empty()) {
    __int128 a = 0, b = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      a += static_cast<__int128>(int_weight_[i]) * mu[i + off];
      b += static_cast<__int128>(int_weight_[i]) * nu[i + off];
    }
    if (a != b) return a < b ? -1 : 1;
  }
  if (kind_ == Kind::DegLex || kind_ == Kind::DegRevLex) {
    std::uint64_t a = 0, b = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      a += mu[i + off];
      b += nu[i + off];
    }
    if (a != b) return a < b ? -1 : 1;
  }
  auto at = [&](const MultiIndex& m, std::size_t i) {
    return perm_.empty() ? m[i + off] : m[perm_[i] + off];
  };
  if (kind_ == Kind::Lex || kind_ == Kind::DegLex) {
    for (std::size_t i = n_; i-- > 0;) {
      auto a = at(mu, i), b = at(nu, i);
      if (a != b) return a < b ? -1 : 1;
    }
  } else {
    for (std::size_t i = 0; i < n_; ++i) {
      auto a = at(mu, i), b = at(nu, i);
      if (a != b) return a > b ? -1 : 1;
    }
  }
  return 0;
}

int TermOrder::compare(const MultiIndex& mu, const MultiIndex& nu) const {
  if (mu.size() != dim() || nu.size() != dim())
    throw DimensionError("order dimension mismatch");
  if (lifted_) {
    auto a = mu.degree(), b = nu.degree();
    if (a != b) return a < b ? -1 : 1;
    int c = base_compare(mu, nu, 1);
    if (c != 0) return c;
    if (mu[0] != nu[0]) return mu[0] < nu[0] ? -1 : 1;
    return 0;
  }
  return base_compare(mu, nu, 0);
}

bool TermOrder::is_monoid_order() const {
  MultiIndex zero(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (compare(zero, MultiIndex::unit(dim(), j)) >= 0) return false;
  return true;
}

bool TermOrder::degree_compatible() const {
  if (lifted_) return true;
  if (!weight_.empty()) {
    for (std::size_t i = 1; i < n_; ++i)
      if (weight_[i] != weight_[0]) return false;
    if (weight_[0] < 0) return false;
    if (weight_[0] > 0) return true;
  }
  return kind_ == Kind::DegLex || kind_ == Kind::DegRevLex;
}

std::string kind_name(TermOrder::Kind k) {
  switch (k) {
    case TermOrder::Kind::Lex: return "lex";
    case TermOrder::Kind::RevLex: return "revlex";
    case TermOrder::Kind::DegLex: return "deglex";
    case TermOrder::Kind::DegRevLex: return "degrevlex";
  }
  return "?";
}

std::string TermOrder::str() const {
  std::string s;
  if (lifted_) s += "lifted ";
  if (!weight_.empty()) {
    s += "weight";
    for (const auto& w : weight_) s += " " + w.get_str();
    s += " refine ";
  }
  s += kind_name(kind_);
  if (!perm_.empty()) {
    s += " perm";
    for (auto p : perm_) s += " " + std::to_string(p + 1);
  }
  return s;
}

bool TermOrder::operator==(const TermOrder& o) const {
  return kind_ == o.kind_ && n_ == o.n_ && perm_ == o.perm_ && weight_ == o.weight_ &&
         lifted_ == o.lifted_;
}

TermOrder lift_order(const TermOrder& order) {
  if (order.lifted_) throw std::logic_error("order is already lifted");
  if (order.n_ + 1 > kMaxDim) throw DimensionError("lifted dimension too large");
  TermOrder r = order;
  r.lifted_ = true;
  return r;
}

namespace {

TermOrder::Kind parse_kind(const std::string& s) {
  if (s == "lex") return TermOrder::Kind::Lex;
  if (s == "revlex") return TermOrder::Kind::RevLex;
  if (s == "deglex") return TermOrder::Kind::DegLex;
  if (s == "degrevlex") return TermOrder::Kind::DegRevLex;
  throw std::invalid_argument("unknown order kind '" + s + "'");
}

}  // namespace

TermOrder parse_order(const std::vector<std::string>& tokens, std::size_t n) {
  std::size_t pos = 0;
  auto need = [&](const char* what) -> const std::string& {
    if (pos >= tokens.size()) throw std::invalid_argument(std::string("order: expected ") + what);
    return tokens[pos++];
  };
  std::vector<mpq_class> weight;
  if (pos < tokens.size() && tokens[pos] == "weight") {
    ++pos;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& t = need("weight entry");
      try {
        mpq_class q(t);
        q.canonicalize();
        weight.push_back(q);
      } catch (const std::exception&) {
        throw std::invalid_argument("order: bad weight entry '" + t + "'");
      }
    }
    if (need("'refine'") != "refine") throw std::invalid_argument("order: expected 'refine'");
  }
  if (pos >= tokens.size() && !weight.empty())
    throw std::invalid_argument("order: expected base order after refine");
  TermOrder::Kind kind = TermOrder::Kind::DegRevLex;
  bool inv = false;
  {
    const std::string& k = need("order kind");
    if (k == "deginvlex") {
      inv = true;
      kind = TermOrder::Kind::DegLex;
    } else {
      kind = parse_kind(k);
    }
  }
  TermOrder o(kind, n);
  if (inv) o = TermOrder::deginvlex(n);
  if (pos < tokens.size() && tokens[pos] == "perm") {
    ++pos;
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& t = need("permutation entry");
      try {
        p.push_back(static_cast<std::size_t>(std::stoul(t)));
      } catch (const std::exception&) {
        throw std::invalid_argument("order: bad permutation entry '" + t + "'");
      }
    }
    o = o.with_permutation(p);
  }
  if (pos != tokens.size()) throw std::invalid_argument("order: trailing token '" + tokens[pos] + "'");
  if (!weight.empty()) o = o.with_weight(weight);
  return o;
}

}  // namespace invol
