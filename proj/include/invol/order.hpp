#ifndef INVOL_ORDER_HPP
#define INVOL_ORDER_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "invol/multiindex.hpp"

namespace invol {

/// Term order on multi-indices.
///
/// lex:    mu < nu iff the last non-vanishing entry of mu - nu is negative.
/// revlex: mu < nu iff the first non-vanishing entry of mu - nu is positive.
/// The deg* kinds compare total degree first. An optional permutation is
/// applied to the entries before the base comparison, an optional rational
/// weight vector is compared before everything else. A lifted order lives on
/// n+1 entries (position 0 is the homogenising variable) and compares total
/// degree first, then the underlying order on positions 1..n.
class TermOrder {
public:
  enum class Kind { Lex, RevLex, DegLex, DegRevLex };

  TermOrder() = default;
  TermOrder(Kind kind, std::size_t n);

  static TermOrder lex(std::size_t n) { return TermOrder(Kind::Lex, n); }
  static TermOrder revlex(std::size_t n) { return TermOrder(Kind::RevLex, n); }
  static TermOrder deglex(std::size_t n) { return TermOrder(Kind::DegLex, n); }
  static TermOrder degrevlex(std::size_t n) { return TermOrder(Kind::DegRevLex, n); }
  /// deglex applied to the reversed entries (x_1 > x_2 > ... > x_n among variables).
  static TermOrder deginvlex(std::size_t n);

  /// perm[i] is the 1-based source position of entry i after permutation.
  TermOrder with_permutation(const std::vector<std::size_t>& perm_one_based) const;
  TermOrder with_weight(const std::vector<mpq_class>& w) const;

  /// Returns -1, 0, 1.
  int compare(const MultiIndex& mu, const MultiIndex& nu) const;
  bool less(const MultiIndex& mu, const MultiIndex& nu) const { return compare(mu, nu) < 0; }

  bool is_monoid_order() const;
  bool lifted() const { return lifted_; }
  /// Number of entries the order compares (n+1 when lifted).
  std::size_t dim() const { return lifted_ ? n_ + 1 : n_; }
  /// Dimension of the underlying unlifted order.
  std::size_t base_dim() const { return n_; }
  Kind kind() const { return kind_; }
  const std::vector<mpq_class>& weight() const { return weight_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  bool degree_compatible() const;

  /// Textual form in the problem-file grammar.
  std::string str() const;
  bool operator==(const TermOrder& o) const;

  friend TermOrder lift_order(const TermOrder& order);

private:
  int base_compare(const MultiIndex& mu, const MultiIndex& nu, std::size_t off) const;

  Kind kind_ = Kind::DegRevLex;
  std::size_t n_ = 0;
  std::vector<std::size_t> perm_;      // 0-based, empty means identity
  std::vector<mpq_class> weight_;      // empty means no weight
  std::vector<long long> int_weight_;  // weight scaled to integers
  bool lifted_ = false;
};

TermOrder lift_order(const TermOrder& order);

/// Parse the tokens following the keyword "order", e.g.
/// "degrevlex", "deglex perm 3 2 1", "weight -1 0 0 1 0 0 refine degrevlex".
TermOrder parse_order(const std::vector<std::string>& tokens, std::size_t n);

std::string kind_name(TermOrder::Kind k);

}  // namespace invol

#endif
