#include "invol/problem.hpp"

#include <sstream>

namespace invol {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string strip_comment(const std::string& s) {
  auto p = s.find('#');
  return p == std::string::npos ? s : s.substr(0, p);
}

std::size_t first_non_space(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

bool is_keyword(const std::string& w) {
  return w == "algebra" || w == "vars" || w == "order" || w == "division" || w == "coeff" ||
         w == "generators:" || w == "target:";
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& t : v) s += (s.empty() ? "" : " ") + t;
  return s;
}

template <class K>
void check_generators(const Problem& p, const std::shared_ptr<Algebra>& alg, const TermOrder& ord) {
  Ring<K> R(alg, ord);
  build_generators(R, p);
  if (p.target) R.parse(p.target->text, p.target->line, p.target->col);
}

template <class K>
std::vector<std::string> print_generators(const Problem& p) {
  auto alg = build_algebra(p);
  Ring<K> R(alg, build_order(p, alg->dim()));
  std::vector<std::string> out;
  for (const auto& g : p.generators) {
    if (is_multiindex_line(g)) {
      out.push_back(parse_multiindex(g.text).str());
    } else {
      out.push_back(R.str(R.parse(g.text, g.line, g.col)));
    }
  }
  if (p.target) out.push_back(R.str(R.parse(p.target->text, p.target->line, p.target->col)));
  return out;
}

}  // namespace

bool is_multiindex_line(const SourceLine& s) {
  auto i = first_non_space(s.text);
  return i < s.text.size() && s.text[i] == '[';
}

Problem parse_problem_syntax(const std::string& text) {
  Problem p;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool in_generators = false;
  bool have_algebra = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto words = split_ws(line);
    if (words.empty()) continue;
    const std::string& kw = words[0];
    const int col = static_cast<int>(first_non_space(line)) + 1;
    if (in_generators && !is_keyword(kw)) {
      p.generators.push_back({line.substr(col - 1), lineno, col});
      continue;
    }
    in_generators = false;
    std::vector<std::string> rest(words.begin() + 1, words.end());
    if (kw == "algebra") {
      if (rest.empty()) throw ParseError("algebra: missing family", lineno, col);
      p.algebra = rest;
      have_algebra = true;
    } else if (kw == "vars") {
      if (rest.empty()) throw ParseError("vars: missing names", lineno, col);
      p.vars = rest;
    } else if (kw == "order") {
      if (rest.empty()) throw ParseError("order: missing kind", lineno, col);
      p.order = rest;
    } else if (kw == "division") {
      if (rest.size() != 1) throw ParseError("division: expected janet or pommaret", lineno, col);
      p.division = rest[0];
    } else if (kw == "coeff") {
      if (rest.size() != 1 || (rest[0] != "rational" && rest[0] != "int" && rest[0] != "qpoly"))
        throw ParseError("coeff: expected rational, int or qpoly", lineno, col);
      p.coeff = rest[0];
    } else if (kw == "generators:") {
      if (!rest.empty()) throw ParseError("generators: expressions go on the following lines", lineno, col);
      in_generators = true;
    } else if (kw == "target:") {
      auto pos = line.find("target:") + 7;
      p.target = SourceLine{line.substr(pos), lineno, static_cast<int>(pos) + 1};
    } else {
      throw ParseError("unknown block '" + kw + "'", lineno, col);
    }
  }
  if (!have_algebra) throw ParseError("missing 'algebra' block", lineno == 0 ? 1 : lineno, 1);
  return p;
}

std::shared_ptr<Algebra> build_algebra(const Problem& p) {
  auto alg = parse_algebra(p.algebra);
  if (!p.vars.empty()) alg->rename(p.vars);
  return alg;
}

TermOrder build_order(const Problem& p, std::size_t n) { return parse_order(p.order, n); }

Division build_division(const Problem& p) { return parse_division(p.division); }

Problem parse_problem(const std::string& text) {
  Problem p = parse_problem_syntax(text);
  std::shared_ptr<Algebra> alg;
  TermOrder ord;
  try {
    alg = build_algebra(p);
    ord = build_order(p, alg->dim());
    build_division(p);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ProblemError(e.what());
  }
  auto rep = validate(alg, ord, 2);
  if (!rep.ok()) throw ProblemError("algebra and order are incompatible", rep.str());
  if (p.coeff == "int") {
    check_generators<Integer>(p, alg, ord);
  } else if (p.coeff == "qpoly") {
    check_generators<QPoly>(p, alg, ord);
  } else {
    check_generators<Rational>(p, alg, ord);
  }
  return p;
}

std::string print_problem(const Problem& p) {
  auto alg = build_algebra(p);
  const TermOrder ord = build_order(p, alg->dim());
  std::string s = "algebra " + join(p.algebra) + "\n";
  if (!p.vars.empty()) s += "vars " + join(p.vars) + "\n";
  s += "order " + ord.str() + "\n";
  s += "division " + build_division(p).str() + "\n";
  if (p.coeff != "rational") s += "coeff " + p.coeff + "\n";
  std::vector<std::string> lines;
  if (p.coeff == "int") {
    lines = print_generators<Integer>(p);
  } else if (p.coeff == "qpoly") {
    lines = print_generators<QPoly>(p);
  } else {
    lines = print_generators<Rational>(p);
  }
  if (p.target) {
    s += "target: " + lines.back() + "\n";
    lines.pop_back();
  }
  s += "generators:\n";
  for (const auto& l : lines) s += l + "\n";
  return s;
}

}  // namespace invol
