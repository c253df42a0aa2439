#ifndef INVOL_RINGSOLVER_HPP
#define INVOL_RINGSOLVER_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "invol/coeff.hpp"

namespace invol {

/// a / b when b divides a exactly.
template <class K>
std::optional<K> exact_quotient(const K& a, const K& b) {
  using T = CoeffTraits<K>;
  if (T::is_zero(b)) return std::nullopt;
  if constexpr (T::is_field) {
    return K(a * T::inverse(b));
  } else {
    auto [q, r] = T::divmod(a, b);
    if (!T::is_zero(r)) return std::nullopt;
    return q;
  }
}

/// Linear equations over a coefficient domain: ideal membership with
/// certificates and syzygy generators. Fields and Euclidean domains only.
template <class K>
class RingSolver {
public:
  using T = CoeffTraits<K>;
  static_assert(T::is_field || T::euclidean, "coefficient domain is not ring-solvable");

  /// Coefficients c with s = sum c_i r_i, or nothing when s is not in the ideal.
  /// A single exact divisor is preferred; otherwise an extended-gcd chain.
  static std::optional<std::vector<K>> membership(const K& s, const std::vector<K>& r) {
    std::vector<K> c(r.size(), T::zero());
    if (T::is_zero(s)) return c;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (auto q = exact_quotient(s, r[i])) {
        c[i] = *q;
        return c;
      }
    }
    if constexpr (T::is_field) {
      return std::nullopt;
    } else {
      // g = sum cert_i r_i, built incrementally.
      K g = T::zero();
      std::vector<K> cert(r.size(), T::zero());
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (T::is_zero(r[i])) continue;
        auto [g2, a, b] = extended_gcd(g, r[i]);
        for (std::size_t j = 0; j < i; ++j) cert[j] = a * cert[j];
        cert[i] = b;
        g = g2;
      }
      auto q = exact_quotient(s, g);
      if (!q) return std::nullopt;
      for (std::size_t i = 0; i < r.size(); ++i) c[i] = *q * cert[i];
      // Shrink c_i modulo r_last / gcd(r_i, r_last), compensating in c_last.
      const std::size_t last = r.size() - 1;
      if (!T::is_zero(r[last])) {
        for (std::size_t i = 0; i < last; ++i) {
          if (T::is_zero(r[i])) continue;
          K g2 = std::get<0>(extended_gcd(r[i], r[last]));
          K m = *exact_quotient(r[last], g2);
          auto [qq, rem] = T::divmod(c[i], m);
          c[i] = rem;
          c[last] += qq * *exact_quotient(r[i], g2);
        }
      }
      return c;
    }
  }

  static bool member(const K& s, const std::vector<K>& r) { return membership(s, r).has_value(); }

  /// Generators of the syzygies of (r_1..r_k): for every pair i < j the
  /// relation (r_j/g) e_i - (r_i/g) e_j with g = gcd(r_i, r_j). Over a field
  /// the pair relation is e_i - (r_i/r_j) e_j.
  static std::vector<std::vector<K>> syzygies(const std::vector<K>& r) {
    std::vector<std::vector<K>> out;
    const std::size_t k = r.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        std::vector<K> s(k, T::zero());
        if (T::is_zero(r[i]) || T::is_zero(r[j])) {
          // A zero entry carries the unit syzygy.
          if (T::is_zero(r[i])) {
            s[i] = T::one();
          } else {
            s[j] = T::one();
          }
        } else if constexpr (T::is_field) {
          s[i] = T::one();
          s[j] = K(-(r[i] * T::inverse(r[j])));
        } else {
          K g = std::get<0>(extended_gcd(r[i], r[j]));
          s[i] = *exact_quotient(r[j], g);
          s[j] = K(-*exact_quotient(r[i], g));
        }
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
      }
    }
    return out;
  }

  static bool verify_syzygy(const std::vector<K>& s, const std::vector<K>& r) {
    if (s.size() != r.size()) return false;
    K acc = T::zero();
    for (std::size_t i = 0; i < r.size(); ++i) acc += s[i] * r[i];
    return T::is_zero(acc);
  }

  static bool verify_certificate(const K& s, const std::vector<K>& c, const std::vector<K>& r) {
    if (c.size() != r.size()) return false;
    K acc = T::zero();
    for (std::size_t i = 0; i < r.size(); ++i) acc += c[i] * r[i];
    return T::is_zero(K(acc - s));
  }
};

}  // namespace invol

#endif
