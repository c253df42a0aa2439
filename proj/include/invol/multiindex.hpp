#ifndef INVOL_MULTIINDEX_HPP
#define INVOL_MULTIINDEX_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invol {

constexpr std::size_t kMaxDim = 16;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector in N_0^n with fixed inline storage.
/// Entries past size() are always zero, so whole-array comparison is valid.
class MultiIndex {
public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t n);
  MultiIndex(std::initializer_list<value_type> entries);
  explicit MultiIndex(const std::vector<value_type>& entries);

  static MultiIndex unit(std::size_t n, std::size_t j);

  std::size_t size() const { return n_; }
  value_type operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, value_type v) { e_[i] = v; }

  std::uint64_t degree() const;
  bool is_zero() const;

  /// Smallest 0-based index with a positive entry; nullopt for the zero index.
  std::optional<std::size_t> cls() const;

  MultiIndex operator+(const MultiIndex& o) const;
  /// Componentwise difference; requires o to divide *this.
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex& increment(std::size_t j);

  bool operator==(const MultiIndex& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const MultiIndex& o) const { return !(*this == o); }

  std::size_t hash() const;
  std::string str() const;

  /// Drop the entry at position 0 (used to project lifted indices).
  MultiIndex drop_front() const;
  /// Prepend an entry (used to lift indices).
  MultiIndex prepend(value_type v) const;

private:
  std::array<value_type, kMaxDim> e_{};
  std::uint8_t n_ = 0;
};

void check_same_dim(const MultiIndex& a, const MultiIndex& b);

MultiIndex add(const MultiIndex& mu, const MultiIndex& nu);
/// True iff nu divides mu, i.e. mu - nu is componentwise non-negative.
bool divides(const MultiIndex& nu, const MultiIndex& mu);
MultiIndex lcm(const MultiIndex& mu, const MultiIndex& nu);
MultiIndex lcm(const std::vector<MultiIndex>& set);
std::uint64_t degree(const MultiIndex& nu);

/// Parse "[a1,...,an]".
MultiIndex parse_multiindex(const std::string& text);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const { return m.hash(); }
};

/// Strict lexicographic comparison on raw entries, for use as a map key order.
struct MultiIndexKeyLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of dimension n with total degree exactly d.
std::vector<MultiIndex> monomials_of_degree(std::size_t n, std::uint64_t d);
/// All multi-indices of dimension n with total degree at most d.
std::vector<MultiIndex> monomials_up_to_degree(std::size_t n, std::uint64_t d);

}  // namespace invol

#endif
