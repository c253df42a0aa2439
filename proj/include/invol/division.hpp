#ifndef INVOL_DIVISION_HPP
#define INVOL_DIVISION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invol/multiindex.hpp"
#include "invol/order.hpp"

namespace invol {

/// Bit i set means 0-based position i is multiplicative.
using IndexSet = std::uint32_t;

inline bool has_index(IndexSet s, std::size_t i) { return (s >> i) & 1u; }
inline IndexSet all_indices(std::size_t n) {
  return n >= 32 ? ~IndexSet{0} : ((IndexSet{1} << n) - 1u);
}
/// Render as "{1,2}" with 1-based positions, or 0-based when zero_based is set.
std::string index_set_str(IndexSet s, std::size_t n, bool zero_based = false);

/// Janet or Pommaret division, optionally lifted to n+1 entries where
/// position 0 carries the homogenising variable.
struct Division {
  enum class Kind { Janet, Pommaret };
  Kind kind = Kind::Janet;
  bool lifted = false;

  static Division janet() { return {Kind::Janet, false}; }
  static Division pommaret() { return {Kind::Pommaret, false}; }
  Division lift() const { return {kind, true}; }
  bool globally_defined() const { return kind == Kind::Pommaret; }
  std::string str() const;
  bool operator==(const Division& o) const { return kind == o.kind && lifted == o.lifted; }
};

Division parse_division(const std::string& name);

/// Pommaret multiplicative indices {0..cls} (0-based); everything for the zero index.
IndexSet pommaret_multiplicative(const MultiIndex& nu);

/// Janet assignment through the lexicographic two-pointer sweep.
/// Requires pairwise distinct elements.
std::vector<IndexSet> janet_multiplicative_sweep(const std::vector<MultiIndex>& N);
/// Janet assignment straight from the class-subset definition. Tolerates repeats.
std::vector<IndexSet> janet_multiplicative_direct(const std::vector<MultiIndex>& N);

/// Multiplicative indices for every element of N, in the order of N.
/// Throws on an empty set or on duplicate elements.
std::vector<IndexSet> multiplicative(const Division& d, const std::vector<MultiIndex>& N);
/// As above but duplicates are allowed; repeated elements receive the same set.
std::vector<IndexSet> multiplicative_multiset(const Division& d, const std::vector<MultiIndex>& N);

/// nu divides mu and every raised entry is in mult.
bool involutively_divides(const MultiIndex& nu, IndexSet mult, const MultiIndex& mu);
/// Throws std::invalid_argument if nu is not an element of N.
bool involutively_divides(const Division& d, const std::vector<MultiIndex>& N,
                          const MultiIndex& nu, const MultiIndex& mu);

/// Position in N of an involutive divisor of mu. Ties are broken by taking
/// the divisor that is smallest under `order` (degrevlex when absent).
std::optional<std::size_t> involutive_divisor(const Division& d, const std::vector<MultiIndex>& N,
                                              const MultiIndex& mu,
                                              const std::optional<TermOrder>& order = std::nullopt);
std::optional<std::size_t> involutive_divisor(const std::vector<MultiIndex>& N,
                                              const std::vector<IndexSet>& mult,
                                              const MultiIndex& mu, const TermOrder& order);

/// Remove elements lying in the involutive cone of another element,
/// recomputing the assignment after every removal.
std::vector<MultiIndex> autoreduce_monomial(const Division& d, std::vector<MultiIndex> N);

}  // namespace invol

#endif
