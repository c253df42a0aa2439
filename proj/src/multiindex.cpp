#include "invol/multiindex.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace invol {

MultiIndex::MultiIndex(std::size_t n) {
  if (n > kMaxDim) throw DimensionError("dimension exceeds " + std::to_string(kMaxDim));
  n_ = static_cast<std::uint8_t>(n);
}

MultiIndex::MultiIndex(std::initializer_list<value_type> entries) : MultiIndex(entries.size()) {
  std::size_t i = 0;
  for (auto v : entries) e_[i++] = v;
}

MultiIndex::MultiIndex(const std::vector<value_type>& entries) : MultiIndex(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) e_[i] = entries[i];
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
  MultiIndex m(n);
  if (j >= n) throw DimensionError("unit index out of range");
  m.e_[j] = 1;
  return m;
}

std::uint64_t MultiIndex::degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool MultiIndex::is_zero() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) return false;
  return true;
}

std::optional<std::size_t> MultiIndex::cls() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) return i;
  return std::nullopt;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  check_same_dim(*this, o);
  MultiIndex r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > std::numeric_limits<value_type>::max() - o.e_[i])
      throw std::overflow_error("multi-index entry overflow");
    r.e_[i] = e_[i] + o.e_[i];
  }
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  check_same_dim(*this, o);
  MultiIndex r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] < o.e_[i]) throw std::domain_error("multi-index subtraction underflow");
    r.e_[i] = e_[i] - o.e_[i];
  }
  return r;
}

MultiIndex& MultiIndex::increment(std::size_t j) {
  if (j >= n_) throw DimensionError("index out of range");
  if (e_[j] == std::numeric_limits<value_type>::max())
    throw std::overflow_error("multi-index entry overflow");
  ++e_[j];
  return *this;
}

std::size_t MultiIndex::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string MultiIndex::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s + "]";
}

MultiIndex MultiIndex::drop_front() const {
  if (n_ == 0) throw DimensionError("cannot project an empty multi-index");
  MultiIndex r(n_ - 1);
  for (std::size_t i = 1; i < n_; ++i) r.e_[i - 1] = e_[i];
  return r;
}

MultiIndex MultiIndex::prepend(value_type v) const {
  MultiIndex r(n_ + 1u);
  r.e_[0] = v;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i + 1] = e_[i];
  return r;
}

void check_same_dim(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size())
    throw DimensionError("dimension mismatch: " + a.str() + " vs " + b.str());
}

MultiIndex add(const MultiIndex& mu, const MultiIndex& nu) { return mu + nu; }

bool divides(const MultiIndex& nu, const MultiIndex& mu) {
  check_same_dim(nu, mu);
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] > mu[i]) return false;
  return true;
}

MultiIndex lcm(const MultiIndex& mu, const MultiIndex& nu) {
  check_same_dim(mu, nu);
  MultiIndex r(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) r.set(i, std::max(mu[i], nu[i]));
  return r;
}

MultiIndex lcm(const std::vector<MultiIndex>& set) {
  if (set.empty()) throw std::invalid_argument("lcm of empty set");
  MultiIndex r = set.front();
  for (const auto& m : set) r = lcm(r, m);
  return r;
}

std::uint64_t degree(const MultiIndex& nu) { return nu.degree(); }

MultiIndex parse_multiindex(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("multi-index parse error at column " + std::to_string(pos + 1) +
                                ": " + what);
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  std::vector<MultiIndex::value_type> v;
  skip();
  if (pos < text.size() && text[pos] == ']') fail("empty multi-index");
  while (true) {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected non-negative integer");
    std::uint64_t x = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      x = x * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (x > std::numeric_limits<MultiIndex::value_type>::max()) fail("entry too large");
      ++pos;
    }
    v.push_back(static_cast<MultiIndex::value_type>(x));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    fail("expected ',' or ']'");
  }
  skip();
  if (pos != text.size()) fail("trailing characters");
  if (v.size() > kMaxDim) fail("dimension too large");
  return MultiIndex(v);
}

bool MultiIndexKeyLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<MultiIndex> monomials_of_degree(std::size_t n, std::uint64_t d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n);
  if (n == 0) return out;
  // Recursive distribution of d over the entries.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == n) {
      cur.set(i, static_cast<MultiIndex::value_type>(left));
      out.push_back(cur);
      return;
    }
    for (std::uint64_t k = 0; k <= left; ++k) {
      cur.set(i, static_cast<MultiIndex::value_type>(k));
      self(self, i + 1, left - k);
    }
    cur.set(i, 0);
  };
  rec(rec, 0, d);
  return out;
}

std::vector<MultiIndex> monomials_up_to_degree(std::size_t n, std::uint64_t d) {
  std::vector<MultiIndex> out;
  for (std::uint64_t k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace invol
