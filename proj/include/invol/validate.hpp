#ifndef INVOL_VALIDATE_HPP
#define INVOL_VALIDATE_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "invol/algebra.hpp"
#include "invol/order.hpp"

namespace invol {

/// Compatibility report of an algebra with a term order. Failures are
/// recorded, never thrown.
struct ValidationReport {
  bool axiom_iii = true;
  std::string axiom_iii_failure;
  bool associative = true;
  std::string associativity_failure;
  /// rho_i is the identity and h_i vanishes on coefficients.
  bool coefficient_maps = true;
  bool centred = true;
  std::size_t checked_pairs = 0;
  std::size_t checked_triples = 0;

  bool ok() const { return axiom_iii && associative && coefficient_maps && centred; }
  std::string str() const;
};

/// le(x^mu * x^nu) = mu + nu with a non-zero coefficient for |mu|, |nu| <= degree_cap,
/// and associativity on `triples` seeded samples of degree <= min(degree_cap, 3).
ValidationReport validate(const std::shared_ptr<const Algebra>& alg, const TermOrder& order,
                          std::uint64_t degree_cap, std::uint64_t seed = 1, std::size_t triples = 200);

}  // namespace invol

#endif
