#ifndef INVOL_ALGEBRA_HPP
#define INVOL_ALGEBRA_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invol/expr.hpp"
#include "invol/multiindex.hpp"

namespace invol {

class AlgebraError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse rational term list; used for commutation data and raw monomial products.
using RTerms = std::vector<std::pair<MultiIndex, mpq_class>>;

/// x_i * x_j = r x_j x_i + h for i > j, where x_j x_i is the normal-ordered
/// monomial 1_i + 1_j.
struct Relation {
  mpq_class r = 1;
  RTerms h;
  bool trivial() const { return r == 1 && h.empty(); }
};

/// Commutation data of a polynomial algebra of solvable type. Coefficients
/// are central: every variable acts on them by the identity with zero tail.
class Algebra {
public:
  enum class Family { Commutative, Weyl, OreShift, OreDifference, Enveloping, QHeisenberg, Custom };

  static Algebra commutative(std::size_t n);
  /// Variables x_1..x_n, D_1..D_n with D_i x_i = x_i D_i + 1.
  static Algebra weyl(std::size_t n);
  /// Variables x_i, S_i with S_i x_i = x_i S_i + S_i.
  static Algebra ore_shift(std::size_t n);
  /// Variables x_i, E_i with E_i x_i = x_i E_i + E_i + 1.
  static Algebra ore_difference(std::size_t n);
  /// Universal enveloping algebra. bracket[i][j] for i > j lists [x_i, x_j]
  /// as a combination of variables (pairs of 0-based index and coefficient).
  static Algebra enveloping(std::size_t n,
                            const std::vector<std::vector<std::vector<std::pair<std::size_t, mpq_class>>>>& bracket,
                            std::string label = "custom");
  static Algebra so3();
  /// Variables delta, tau, xhat of the q-deformed Heisenberg algebra.
  static Algebra q_heisenberg(const mpq_class& q);
  /// Lines "vars a b c" and "rel b a = a*b - c" (right hand sides are read
  /// as commutative, normal-ordered polynomials). '#' starts a comment.
  static Algebra custom(const std::string& text, const std::string& label = "custom");

  std::size_t dim() const { return n_; }
  Family family() const { return family_; }
  const std::vector<std::string>& names() const { return names_; }
  void rename(const std::vector<std::string>& names);
  /// 0-based index of a variable name, or -1.
  int index_of(const std::string& name) const;
  /// Relation for 0-based i > j.
  const Relation& rel(std::size_t i, std::size_t j) const { return rel_[i * n_ + j]; }
  bool is_commutative() const;
  /// Number of (x, D) pairs in the Ore families.
  std::size_t ore_pairs() const { return family_ == Family::Weyl || family_ == Family::OreShift ||
                                                 family_ == Family::OreDifference
                                             ? n_ / 2
                                             : 0; }
  /// Mora normal forms are permitted: the multiplicative-variable subalgebras are subrings.
  bool mora_subring() const { return mora_subring_; }
  /// All r_ij lie in the central coefficient field.
  bool centred() const { return true; }
  /// Largest total degree among the tails h_ij.
  std::uint64_t max_tail_degree() const;
  /// Description in the problem-file grammar, e.g. "weyl 3".
  const std::string& description() const { return description_; }

private:
  Algebra(std::size_t n, Family f);
  void set_rel(std::size_t i, std::size_t j, Relation r);

  std::size_t n_ = 0;
  Family family_ = Family::Commutative;
  std::vector<std::string> names_;
  std::vector<Relation> rel_;
  bool mora_subring_ = true;
  std::string description_;
};

std::string family_name(Algebra::Family f);

/// Memoised normal-ordered products of standard monomials with rational
/// coefficients. The cache is not synchronised; keep one per thread.
class MonomialMultiplier {
public:
  explicit MonomialMultiplier(std::shared_ptr<const Algebra> alg);
  const RTerms& product(const MultiIndex& mu, const MultiIndex& nu);
  /// Product by pure rewriting, bypassing the Ore closed form.
  const RTerms& product_rewriting(const MultiIndex& mu, const MultiIndex& nu);
  /// Closed Ore form only (Weyl, shift, difference families).
  RTerms product_ore(const MultiIndex& mu, const MultiIndex& nu) const;
  const Algebra& algebra() const { return *alg_; }
  std::size_t cache_size() const { return cache_.size(); }

private:
  struct PairHash {
    std::size_t operator()(const std::pair<MultiIndex, MultiIndex>& p) const {
      return p.first.hash() * 1000003u ^ p.second.hash();
    }
  };
  const RTerms& rewrite(const MultiIndex& mu, const MultiIndex& nu);

  std::shared_ptr<const Algebra> alg_;
  std::unordered_map<std::pair<MultiIndex, MultiIndex>, RTerms, PairHash> cache_;
  std::unordered_map<std::pair<MultiIndex, MultiIndex>, RTerms, PairHash> ore_cache_;
};

/// Parse "weyl 2", "commutative 3", "ore-shift 1", "ore-difference 1",
/// "enveloping so3", "qheisenberg 2/1"; "custom <file>" reads the file.
std::shared_ptr<Algebra> parse_algebra(const std::vector<std::string>& tokens);

}  // namespace invol

#endif
