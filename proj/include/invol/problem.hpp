#ifndef INVOL_PROBLEM_HPP
#define INVOL_PROBLEM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invol/algebra.hpp"
#include "invol/division.hpp"
#include "invol/expr.hpp"
#include "invol/order.hpp"
#include "invol/poly.hpp"
#include "invol/validate.hpp"

namespace invol {

/// A source line of the problem file.
struct SourceLine {
  std::string text;
  int line = 0;
  int col = 1;
};

/// Parsed problem file. Blocks:
///   algebra <family> <args>     vars <names>       order <order tokens>
///   division janet|pommaret     coeff rational|int|qpoly
///   target: <expression>        generators:  (one expression or [multi index] per line)
struct Problem {
  std::vector<std::string> algebra{"commutative", "3"};
  std::vector<std::string> vars;
  std::vector<std::string> order{"degrevlex"};
  std::string division = "janet";
  std::string coeff = "rational";
  std::vector<SourceLine> generators;
  std::optional<SourceLine> target;
};

class ProblemError : public std::runtime_error {
public:
  ProblemError(const std::string& msg, std::string report = {})
      : std::runtime_error(msg), report_(std::move(report)) {}
  const std::string& report() const { return report_; }

private:
  std::string report_;
};

/// Syntax only; see check_problem for semantic validation.
Problem parse_problem_syntax(const std::string& text);

std::shared_ptr<Algebra> build_algebra(const Problem& p);
TermOrder build_order(const Problem& p, std::size_t n);
Division build_division(const Problem& p);

/// Parse and validate: algebra, order, the compatibility report and every
/// generator expression. Throws ParseError or ProblemError.
Problem parse_problem(const std::string& text);

/// Canonical text: every block on its own line, generators re-printed.
std::string print_problem(const Problem& p);

/// True when the generator line is a multi index such as [0,2].
bool is_multiindex_line(const SourceLine& s);

template <class K>
std::vector<Poly<K>> build_generators(const Ring<K>& R, const Problem& p) {
  std::vector<Poly<K>> out;
  for (const auto& g : p.generators) {
    if (is_multiindex_line(g)) {
      MultiIndex mu;
      try {
        mu = parse_multiindex(g.text);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), g.line, g.col);
      }
      if (mu.size() != R.dim()) throw ParseError("multi index has the wrong length", g.line, g.col);
      out.push_back(R.monomial(mu, CoeffTraits<K>::one()));
    } else {
      out.push_back(R.parse(g.text, g.line, g.col));
    }
  }
  return out;
}

}  // namespace invol

#endif
