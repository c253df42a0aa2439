#ifndef INVOL_COEFF_HPP
#define INVOL_COEFF_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace invol {

using Rational = mpq_class;
using Integer = mpz_class;

class CoefficientError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Prime field Z/PZ.
template <std::uint32_t P>
class Zp {
public:
  Zp() = default;
  Zp(long long v) : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}
  std::uint32_t value() const { return v_; }
  Zp operator+(Zp o) const { return raw((v_ + o.v_) % P); }
  Zp operator-(Zp o) const { return raw((v_ + P - o.v_) % P); }
  Zp operator-() const { return raw((P - v_) % P); }
  Zp operator*(Zp o) const {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P));
  }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }
  bool operator==(Zp o) const { return v_ == o.v_; }
  bool operator!=(Zp o) const { return v_ != o.v_; }
  Zp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in prime field");
    std::uint64_t r = 1, b = v_, e = P - 2;
    while (e) {
      if (e & 1) r = r * b % P;
      b = b * b % P;
      e >>= 1;
    }
    return raw(static_cast<std::uint32_t>(r));
  }

private:
  static Zp raw(std::uint32_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }
  std::uint32_t v_ = 0;
};

/// Univariate polynomials over Q in the parameter t, dense, low degree first.
class QPoly {
public:
  QPoly() = default;
  QPoly(long v) : c_{Rational(v)} { trim(); }
  explicit QPoly(const Rational& v) : c_{v} { trim(); }
  explicit QPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static QPoly t() { return QPoly(std::vector<Rational>{0, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  /// Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  std::string str() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

template <class K>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static constexpr bool is_field = true;
  static constexpr bool euclidean = false;
  static const char* name() { return "rational"; }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational inverse(const Rational& a) {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return Rational(1) / a;
  }
  static Rational from_rational(const Rational& q) { return q; }
  static std::string to_string(const Rational& a) { return a.get_str(); }
  static bool atomic(const Rational&) { return true; }
};

template <>
struct CoeffTraits<Integer> {
  static constexpr bool is_field = false;
  static constexpr bool euclidean = true;
  static const char* name() { return "integer"; }
  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
  static Integer inverse(const Integer& a) {
    if (!is_unit(a)) throw std::domain_error("non-unit integer has no inverse");
    return a;
  }
  static Integer from_rational(const Rational& q) {
    if (q.get_den() != 1) throw CoefficientError("non-integral constant " + q.get_str());
    return q.get_num();
  }
  static std::string to_string(const Integer& a) { return a.get_str(); }
  static bool atomic(const Integer&) { return true; }
  /// Remainder satisfies 0 <= r < |b|.
  static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) < 0) {
      r += abs(b);
      q -= sgn(b);
    }
    return {q, r};
  }
  /// Smaller Euclidean size.
  static bool size_less(const Integer& a, const Integer& b) { return abs(a) < abs(b); }
  /// Associate normalisation: returns a unit u with u*a canonical (non-negative).
  static Integer canonical_unit(const Integer& a) { return sgn(a) < 0 ? Integer(-1) : Integer(1); }
};

template <>
struct CoeffTraits<QPoly> {
  static constexpr bool is_field = false;
  static constexpr bool euclidean = true;
  static const char* name() { return "qpoly"; }
  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(1); }
  static bool is_zero(const QPoly& a) { return a.is_zero(); }
  static bool is_unit(const QPoly& a) { return a.degree() == 0; }
  static QPoly inverse(const QPoly& a) {
    if (!is_unit(a)) throw std::domain_error("non-constant polynomial has no inverse");
    return QPoly(Rational(1) / a.lead());
  }
  static QPoly from_rational(const Rational& q) { return QPoly(q); }
  static std::string to_string(const QPoly& a) { return a.str(); }
  static bool atomic(const QPoly& a) { return a.degree() <= 0 || (a.degree() == 1 && a.coeffs()[0] == 0); }
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) { return a.divmod(b); }
  static bool size_less(const QPoly& a, const QPoly& b) { return a.degree() < b.degree(); }
  static QPoly canonical_unit(const QPoly& a) {
    return a.is_zero() ? QPoly(1) : QPoly(Rational(1) / a.lead());
  }
};

template <std::uint32_t P>
struct CoeffTraits<Zp<P>> {
  static constexpr bool is_field = true;
  static constexpr bool euclidean = false;
  static const char* name() { return "prime"; }
  static Zp<P> zero() { return Zp<P>(0); }
  static Zp<P> one() { return Zp<P>(1); }
  static bool is_zero(const Zp<P>& a) { return a.value() == 0; }
  static Zp<P> inverse(const Zp<P>& a) { return a.inverse(); }
  static Zp<P> from_rational(const Rational& q) {
    mpz_class n = q.get_num() % P, d = q.get_den() % P;
    Zp<P> dd(d.get_si());
    if (dd.value() == 0) throw CoefficientError("denominator vanishes modulo " + std::to_string(P));
    return Zp<P>(n.get_si()) * dd.inverse();
  }
  static std::string to_string(const Zp<P>& a) { return std::to_string(a.value()); }
  static bool atomic(const Zp<P>&) { return true; }
};

/// Extended gcd in a Euclidean domain: g = s*a + t*b, g canonical.
template <class K>
std::tuple<K, K, K> extended_gcd(const K& a, const K& b) {
  using T = CoeffTraits<K>;
  K r0 = a, r1 = b, s0 = T::one(), s1 = T::zero(), t0 = T::zero(), t1 = T::one();
  while (!T::is_zero(r1)) {
    auto [q, r] = T::divmod(r0, r1);
    K s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (T::is_zero(r0)) return {T::zero(), T::zero(), T::zero()};
  K u = T::canonical_unit(r0);
  return {K(u * r0), K(u * s0), K(u * t0)};
}

}  // namespace invol

#endif
