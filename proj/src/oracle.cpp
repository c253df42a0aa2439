#include "invol/oracle.hpp"

namespace invol {

SpanReport bruteforce_span(const std::vector<MultiIndex>& N, const Division& d, std::uint64_t bound) {
  SpanReport r;
  if (N.empty()) return r;
  const auto mult = multiplicative_multiset(d, N);
  for (const auto& mu : monomials_up_to_degree(N.front().size(), bound)) {
    std::size_t inv = 0;
    bool in_span = false;
    for (std::size_t k = 0; k < N.size(); ++k) {
      if (!divides(N[k], mu)) continue;
      in_span = true;
      if (involutively_divides(N[k], mult[k], mu)) ++inv;
    }
    if (!in_span) {
      r.outside.push_back(mu);
    } else if (inv == 0) {
      r.obstructions.push_back(mu);
    } else {
      r.involutive.push_back(mu);
      if (inv > 1) r.overlaps.push_back(mu);
    }
  }
  return r;
}

}  // namespace invol
