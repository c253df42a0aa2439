#include "invol/expr.hpp"

#include <algorithm>
#include <cctype>

namespace invol {

namespace {

class Parser {
public:
  Parser(const std::string& s, int line, int col0) : s_(s), line_(line), col0_(col0) {}

  ExprPtr run() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    auto e = sum();
    skip();
    if (pos_ < s_.size()) {
      if (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')
        fail("juxtaposition is not allowed; use '*'");
      fail(std::string("unexpected character '") + s_[pos_] + "'");
    }
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + static_cast<int>(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::shared_ptr<Expr> node(Expr::Kind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = line_;
    e->col = col0_ + static_cast<int>(pos_);
    return e;
  }

  ExprPtr sum() {
    auto lhs = product();
    while (true) {
      skip();
      Expr::Kind k;
      if (eat('+')) {
        k = Expr::Kind::Add;
      } else if (eat('-')) {
        k = Expr::Kind::Sub;
      } else {
        return lhs;
      }
      auto n = node(k);
      n->kids = {lhs, product()};
      lhs = n;
    }
  }

  ExprPtr product() {
    auto lhs = unary();
    while (eat('*')) {
      auto n = node(Expr::Kind::Mul);
      n->kids = {lhs, unary()};
      lhs = n;
    }
    return lhs;
  }

  ExprPtr unary() {
    skip();
    if (eat('-')) {
      auto n = node(Expr::Kind::Neg);
      n->kids = {unary()};
      return n;
    }
    if (eat('+')) return unary();
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 6) fail("exponent too large");
      auto n = node(Expr::Kind::Pow);
      n->exponent = static_cast<unsigned>(std::stoul(digits));
      n->kids = {base};
      return n;
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = node(Expr::Kind::Number);
      std::string num = digits();
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      }
      n->value = mpq_class(mpz_class(num), mpz_class(den));
      n->value.canonicalize();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto n = node(Expr::Kind::Ident);
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      n->name = s_.substr(start, pos_ - start);
      return n;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

void collect(const Expr& e, std::vector<std::string>& out) {
  if (e.kind == Expr::Kind::Ident && std::find(out.begin(), out.end(), e.name) == out.end())
    out.push_back(e.name);
  for (const auto& k : e.kids) collect(*k, out);
}

}  // namespace

ExprPtr parse_expr(const std::string& text, int line, int col0) {
  return Parser(text, line, col0).run();
}

std::vector<std::string> identifiers(const Expr& e) {
  std::vector<std::string> out;
  collect(e, out);
  return out;
}

}  // namespace invol
