#ifndef INVOL_EXPR_HPP
#define INVOL_EXPR_HPP

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace invol {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

private:
  int line_;
  int col_;
};

/// Syntax tree of a polynomial expression: identifiers, rational literals,
/// + - * ^ and parentheses. Juxtaposition is rejected.
struct Expr {
  enum class Kind { Number, Ident, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Number;
  mpq_class value;
  std::string name;
  unsigned exponent = 0;
  int line = 1;
  int col = 1;
  std::vector<std::shared_ptr<const Expr>> kids;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// `line` and `col0` locate text[0] for error reporting.
ExprPtr parse_expr(const std::string& text, int line = 1, int col0 = 1);

/// Every identifier appearing in the tree, in order of first appearance.
std::vector<std::string> identifiers(const Expr& e);

}  // namespace invol

#endif
