#ifndef INVOL_MONO_COMPLETION_HPP
#define INVOL_MONO_COMPLETION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invol/division.hpp"
#include "invol/multiindex.hpp"

namespace invol {

enum class Strength { Weak, Strong, NotABasis };
std::string strength_str(Strength s);

/// Raised when a completion exceeds its step budget. Carries the partial state.
class StepCapExceeded : public std::runtime_error {
public:
  StepCapExceeded(const std::string& what, std::vector<MultiIndex> partial = {},
                  std::vector<MultiIndex> added = {})
      : std::runtime_error(what), partial_(std::move(partial)), added_(std::move(added)) {}
  const std::vector<MultiIndex>& partial() const { return partial_; }
  const std::vector<MultiIndex>& added() const { return added_; }

private:
  std::vector<MultiIndex> partial_;
  std::vector<MultiIndex> added_;
};

struct MonomialBasisResult {
  std::vector<MultiIndex> generators;
  std::vector<IndexSet> multiplicative;
  Strength strength = Strength::Weak;
  std::vector<MultiIndex> added;  // in insertion order
};

/// In the involutive span of N (with the given assignment).
bool in_involutive_span(const std::vector<MultiIndex>& N, const std::vector<IndexSet>& mult,
                        const MultiIndex& mu);
bool in_span(const std::vector<MultiIndex>& N, const MultiIndex& mu);

/// {nu + 1_j : j non-multiplicative for nu, nu + 1_j outside the involutive span},
/// sorted ascending under degrevlex.
std::vector<MultiIndex> local_obstructions(const Division& d, const std::vector<MultiIndex>& N);

struct MonoCompletionOptions {
  std::size_t step_cap = 10000;
  /// Autoreduce after every insertion instead of only at the end.
  bool autoreduce_each_step = false;
  /// Pick the degrevlex-largest minimal obstruction instead of the least one.
  bool reverse_tie_break = false;
};

MonomialBasisResult complete_monomial(const Division& d, const std::vector<MultiIndex>& N,
                                      const MonoCompletionOptions& opt = {});

/// Elements of the span of N dividing lcm(N).
std::vector<MultiIndex> janet_box_completion(const std::vector<MultiIndex>& N);

struct IrreducibleGenerator {
  MultiIndex::value_type ell;  // exponent
  std::size_t index;           // 1-based variable position
};

struct PommaretIrreducibleResult {
  bool finite = false;
  std::vector<MultiIndex> basis;
};

/// Pommaret basis of the irreducible ideal generated by ell_j * 1_{i_j}.
PommaretIrreducibleResult pommaret_irreducible(std::size_t n,
                                               const std::vector<IrreducibleGenerator>& gens);

std::vector<MultiIndex> pommaret_product_basis(const std::vector<MultiIndex>& N1,
                                               const std::vector<MultiIndex>& N2);
std::vector<MultiIndex> pommaret_intersection_basis(const std::vector<MultiIndex>& N1,
                                                    const std::vector<MultiIndex>& N2);

/// Minimal generating set of the monoid ideal spanned by N, sorted by raw entries.
std::vector<MultiIndex> minimal_monomial_basis(const std::vector<MultiIndex>& N);

}  // namespace invol

#endif
