#include "invol/coeff.hpp"

#include <algorithm>

namespace invol {

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x = -x;
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rational> rem(c_);
  std::vector<Rational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / d.c_[dd];
    q[k - dd] = f;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= f * d.c_[i];
  }
  return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& a = c_[k];
    if (a == 0) continue;
    Rational m = abs(a);
    bool neg = sgn(a) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += m.get_str();
      continue;
    }
    if (m != 1) out += m.get_str() + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace invol
