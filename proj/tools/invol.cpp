#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "invol/completion.hpp"
#include "invol/local.hpp"
#include "invol/mono_completion.hpp"
#include "invol/oracle.hpp"
#include "invol/problem.hpp"
#include "invol/ringcoeff.hpp"
#include "invol/validate.hpp"

using namespace invol;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitVerify = 3;

struct Options {
  std::string command;
  std::string file;
  std::string division;
  std::string order;
  std::string algebra;
  std::string local;
  std::string coeff;
  bool two_sided = false;
  bool minimal = false;
  bool trace = false;
  bool strong_janet = false;
  bool allow_iterated = false;
  bool json = false;
  bool repr = false;
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  /// Insertion cap for the completions; 0 keeps the library default.
  std::size_t cap = 0;

  CompletionCaps caps() const {
    CompletionCaps c;
    if (cap) c.insertions = cap;
    return c;
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Problem text with command-line overrides applied, re-validated.
Problem load_problem(const Options& o, bool validate_now = true) {
  Problem p = parse_problem_syntax(read_file(o.file));
  if (!o.algebra.empty()) {
    p.algebra = split_ws(o.algebra);
    p.vars.clear();
  }
  if (!o.order.empty()) p.order = split_ws(o.order);
  if (!o.division.empty()) p.division = o.division;
  if (!o.coeff.empty()) p.coeff = o.coeff;
  if (validate_now) p = parse_problem(print_problem(p));
  return p;
}

std::string mult_str(IndexSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!has_index(s, i)) continue;
    out += (first ? "" : ",") + names[i];
    first = false;
  }
  return out + "}";
}

Json mult_json(IndexSet s, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (has_index(s, i)) a.push_back(names[i]);
  return a;
}

template <class K>
Json poly_json(const Ring<K>& R, const Poly<K>& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms) {
    Json e = Json::array();
    for (std::size_t i = 0; i < t.e.size(); ++i) e.push_back(t.e[i]);
    terms.push_back(Json{{"exponent", e}, {"coefficient", CoeffTraits<K>::to_string(t.c)}});
  }
  return Json{{"poly", R.str(f)}, {"terms", terms}};
}

Json header_json(const std::string& command, const Problem& p) {
  auto alg = build_algebra(p);
  return Json{{"command", command},
              {"algebra", alg->description()},
              {"order", build_order(p, alg->dim()).str()},
              {"division", build_division(p).str()},
              {"coeff", p.coeff}};
}

void print_header(const Problem& p) {
  auto alg = build_algebra(p);
  std::cout << "algebra: " << alg->description() << "\n";
  std::cout << "order: " << build_order(p, alg->dim()).str() << "\n";
  std::cout << "division: " << build_division(p).str() << "\n";
  if (p.coeff != "rational") std::cout << "coeff: " << p.coeff << "\n";
}

template <class K>
void emit_basis(const Options& o, const Problem& p, const Ring<K>& R, const InvolutiveBasis<K>& B,
                const std::string& mode) {
  const std::string sided = B.sidedness == Sidedness::Left ? "left" : "two-sided";
  if (o.json) {
    Json j = header_json(o.command, p);
    j["mode"] = mode;
    j["kind"] = strength_str(B.strength);
    j["sidedness"] = sided;
    Json gens = Json::array();
    for (std::size_t k = 0; k < B.generators.size(); ++k) {
      Json g = poly_json(R, B.generators[k]);
      g["multiplicative"] = k < B.multiplicative.size() ? mult_json(B.multiplicative[k], R.names()) : Json::array();
      gens.push_back(g);
    }
    j["generators"] = gens;
    Json added = Json::array();
    for (const auto& a : B.added) added.push_back(R.str(a));
    j["added"] = added;
    if (mode == "homog") j["homogeneous_size"] = B.homogeneous_size;
    if (o.trace) {
      Json tr = Json::array();
      for (const auto& t : B.trace) tr.push_back(Json{{"le", t.le.str()}, {"action", t.action}});
      j["trace"] = tr;
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  print_header(p);
  std::cout << "mode: " << mode << "\n";
  std::cout << "kind: " << strength_str(B.strength) << "\n";
  std::cout << "sidedness: " << sided << "\n";
  if (mode == "homog") std::cout << "homogeneous-size: " << B.homogeneous_size << "\n";
  std::cout << "generators: " << B.generators.size() << "\n";
  for (std::size_t k = 0; k < B.generators.size(); ++k) {
    std::cout << "  g" << k + 1 << " = " << R.str(B.generators[k]);
    if (k < B.multiplicative.size()) std::cout << "   " << mult_str(B.multiplicative[k], R.names());
    std::cout << "\n";
  }
  for (const auto& a : B.added) std::cout << "added: " << R.str(a) << "\n";
  if (o.trace)
    for (const auto& t : B.trace) std::cout << "trace: " << t.le.str() << " " << t.action << "\n";
}

template <class K>
int run_complete(const Options& o, const Problem& p) {
  auto alg = build_algebra(p);
  const TermOrder ord = build_order(p, alg->dim());
  const Division d = build_division(p);
  Ring<K> R(alg, ord);
  auto F = build_generators(R, p);
  InvolutiveBasis<K> B;
  std::string mode = "global";
  if constexpr (CoeffTraits<K>::is_field) {
    if (!o.local.empty()) {
      if (o.two_sided) throw ProblemError("--two-sided cannot be combined with --local");
      if (o.local == "mora") {
        MoraOptions mo;
        mo.allow_iterated = o.allow_iterated;
        B = complete_local(R, F, d, o.caps(), mo);
        mode = "mora";
      } else if (o.local == "homog") {
        HomogenizationOptions ho;
        ho.strong_janet = o.strong_janet;
        B = complete_via_homogenization(R, F, d, o.caps(), ho);
        mode = "homog";
      } else {
        throw ProblemError("--local expects mora or homog");
      }
    } else {
      if (!ord.is_monoid_order()) throw ProblemError("the order is not a monoid order; use --local mora|homog");
      B = o.two_sided ? two_sided_basis(R, F, d, o.caps()) : complete(R, F, d, o.caps());
      if (o.minimal) B = minimal_candidate(R, B);
    }
  } else {
    if (!o.local.empty() || o.two_sided || o.minimal)
      throw ProblemError("ring coefficients support plain completion only");
    B = complete_over_ring(R, F, d, o.caps());
    mode = "ring";
  }
  emit_basis(o, p, R, B, mode);
  return kExitOk;
}

template <class K>
int run_nf(const Options& o, const Problem& p) {
  if (!p.target) throw ProblemError("nf needs a 'target:' line");
  auto alg = build_algebra(p);
  Ring<K> R(alg, build_order(p, alg->dim()));
  const Division d = build_division(p);
  auto H = build_generators(R, p);
  Poly<K> f = R.parse(p.target->text, p.target->line, p.target->col);
  const auto mult = H.empty() ? std::vector<IndexSet>{} : multiplicative_multiset(d, detail::leading_exponents(H));
  auto rep = involutive_normal_form(R, f, H, d, NFMode::Full, &mult);
  const bool ok = verify_representation(R, f, H, rep, &mult);
  if (o.json) {
    Json j = header_json(o.command, p);
    j["target"] = R.str(f);
    j["remainder"] = poly_json(R, rep.remainder);
    if (o.repr) {
      Json c = Json::array();
      for (const auto& P : rep.coefficients) c.push_back(R.str(P));
      j["coefficients"] = c;
    }
    j["verified"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    print_header(p);
    std::cout << "target: " << R.str(f) << "\n";
    std::cout << "remainder: " << R.str(rep.remainder) << "\n";
    if (o.repr)
      for (std::size_t k = 0; k < H.size(); ++k) std::cout << "  P" << k + 1 << " = " << R.str(rep.coefficients[k]) << "\n";
    std::cout << "verified: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kExitOk : kExitVerify;
}

int run_mora_nf(const Options& o, const Problem& p) {
  if (!p.target) throw ProblemError("mora-nf needs a 'target:' line");
  if (p.coeff != "rational") throw ProblemError("mora-nf needs rational coefficients");
  auto alg = build_algebra(p);
  Ring<Rational> R(alg, build_order(p, alg->dim()));
  const Division d = build_division(p);
  auto G = build_generators(R, p);
  Poly<Rational> f = R.parse(p.target->text, p.target->line, p.target->col);
  MoraOptions mo;
  mo.allow_iterated = o.allow_iterated;
  const auto mult = G.empty() ? std::vector<IndexSet>{} : multiplicative_multiset(d, detail::leading_exponents(G));
  auto m = mora_normal_form(R, f, G, d, &mult, mo);
  const bool ok = verify_mora(R, f, G, m, &mult);
  if (o.json) {
    Json j = header_json(o.command, p);
    j["target"] = R.str(f);
    j["remainder"] = poly_json(R, m.remainder);
    j["unit"] = R.str(m.unit);
    if (o.repr) {
      Json c = Json::array();
      for (const auto& P : m.coefficients) c.push_back(R.str(P));
      j["coefficients"] = c;
    }
    j["verified"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    print_header(p);
    std::cout << "target: " << R.str(f) << "\n";
    std::cout << "remainder: " << R.str(m.remainder) << "\n";
    std::cout << "unit: " << R.str(m.unit) << "\n";
    if (o.repr)
      for (std::size_t k = 0; k < G.size(); ++k) std::cout << "  P" << k + 1 << " = " << R.str(m.coefficients[k]) << "\n";
    std::cout << "verified: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kExitOk : kExitVerify;
}

int run_mono_complete(const Options& o, const Problem& p) {
  auto alg = build_algebra(p);
  const std::size_t n = alg->dim();
  Ring<Rational> R(alg, build_order(p, n));
  const Division d = build_division(p);
  std::vector<MultiIndex> N;
  for (const auto& f : build_generators(R, p)) {
    if (f.size() != 1) throw ProblemError("mono-complete needs monomial generators");
    N.push_back(f.le());
  }
  try {
    MonoCompletionOptions mopt;
    if (o.cap) mopt.step_cap = o.cap;
    auto res = complete_monomial(d, N, mopt);
    const auto report = bruteforce_span(res.generators, d, lcm(res.generators).degree() + 2);
    const bool ok = report.obstructions.empty();
    if (o.json) {
      Json j = header_json(o.command, p);
      j["kind"] = strength_str(res.strength);
      Json gens = Json::array();
      for (std::size_t k = 0; k < res.generators.size(); ++k)
        gens.push_back(Json{{"index", res.generators[k].str()},
                            {"multiplicative", mult_json(res.multiplicative[k], R.names())}});
      j["generators"] = gens;
      Json added = Json::array();
      for (const auto& a : res.added) added.push_back(a.str());
      j["added"] = added;
      j["certified"] = ok;
      std::cout << j.dump(2) << "\n";
    } else {
      print_header(p);
      std::cout << "kind: " << strength_str(res.strength) << "\n";
      std::cout << "generators: " << res.generators.size() << "\n";
      for (std::size_t k = 0; k < res.generators.size(); ++k)
        std::cout << "  " << res.generators[k].str() << "   " << mult_str(res.multiplicative[k], R.names()) << "\n";
      for (const auto& a : res.added) std::cout << "added: " << a.str() << "\n";
      std::cout << "certified: " << (ok ? "yes" : "no") << "\n";
    }
    return ok ? kExitOk : kExitVerify;
  } catch (const StepCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << "partial:";
    for (const auto& a : e.partial()) std::cout << " " << a.str();
    std::cout << "\n";
    return kExitCap;
  }
}

int run_validate(const Options& o) {
  Problem p = load_problem(o, false);
  auto alg = build_algebra(p);
  const TermOrder ord = build_order(p, alg->dim());
  auto rep = validate(alg, ord, 4, o.seed);
  if (o.json) {
    Json j{{"command", o.command},
           {"algebra", alg->description()},
           {"order", ord.str()},
           {"axiom_iii", rep.axiom_iii},
           {"axiom_iii_failure", rep.axiom_iii_failure},
           {"associative", rep.associative},
           {"associativity_failure", rep.associativity_failure},
           {"coefficient_maps", rep.coefficient_maps},
           {"centred", rep.centred},
           {"checked_pairs", rep.checked_pairs},
           {"checked_triples", rep.checked_triples}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algebra: " << alg->description() << "\norder: " << ord.str() << "\n" << rep.str();
  }
  return rep.ok() ? kExitOk : kExitVerify;
}

/// Random ideals: n <= 3, at most 3 generators of degree <= 3.
std::vector<Poly<Rational>> random_ideal(const Ring<Rational>& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3), deg(1, 3), terms(1, 3);
  std::vector<Poly<Rational>> F;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    auto f = random_polynomial(R, rng, static_cast<std::uint64_t>(deg(rng)), static_cast<std::size_t>(terms(rng)));
    if (!f.is_zero()) F.push_back(f);
  }
  return F;
}

int run_oracle_check(const Options& o) {
  Json results = Json::array();
  bool all = true;
  auto record = [&](const std::string& label, const Verdict& v) {
    all = all && v.agree;
    results.push_back(Json{{"case", label}, {"agree", v.agree}, {"basis_size", v.basis_size},
                           {"groebner_size", v.groebner_size}, {"divergence", v.divergence}});
    if (!o.json)
      std::cout << label << ": " << (v.agree ? "agree" : "DISAGREE " + v.divergence) << " (basis " << v.basis_size
                << ", groebner " << v.groebner_size << ")\n";
  };
  if (!o.file.empty()) {
    Problem p = load_problem(o);
    if (p.coeff != "rational") throw ProblemError("oracle-check needs rational coefficients");
    auto alg = build_algebra(p);
    Ring<Rational> R(alg, build_order(p, alg->dim()));
    auto F = build_generators(R, p);
    for (std::size_t t = 0; t < o.trials; ++t)
      record("trial " + std::to_string(t + 1), equivalence_check(R, F, build_division(p), o.seed + t));
  } else {
    std::mt19937_64 rng(o.seed);
    std::vector<std::shared_ptr<Algebra>> algs{std::make_shared<Algebra>(Algebra::commutative(3)),
                                               std::make_shared<Algebra>(Algebra::weyl(1))};
    const Division d = o.division.empty() ? Division::janet() : parse_division(o.division);
    for (std::size_t t = 0; t < o.trials; ++t) {
      auto alg = algs[t % algs.size()];
      Ring<Rational> R(alg, TermOrder::degrevlex(alg->dim()));
      auto F = random_ideal(R, rng);
      record("trial " + std::to_string(t + 1) + " " + alg->description(), equivalence_check(R, F, d, rng()));
    }
  }
  if (o.json) {
    Json j{{"command", o.command}, {"seed", o.seed}, {"trials", o.trials}, {"results", results}, {"agree", all}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << (all ? "agree" : "disagree") << "\n";
  }
  return all ? kExitOk : kExitVerify;
}

int run_bench(const Options& o) {
  Problem p = load_problem(o);
  if (p.coeff != "rational") throw ProblemError("bench needs rational coefficients");
  auto alg = build_algebra(p);
  Ring<Rational> R(alg, build_order(p, alg->dim()));
  const Division d = build_division(p);
  auto F = build_generators(R, p);
  std::size_t size = 0;
  double total = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto start = std::chrono::steady_clock::now();
    Ring<Rational> fresh(alg, R.order());
    size = complete(fresh, F, d).generators.size();
    total += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << "trials: " << o.trials << "\ngenerators: " << size << "\nmean-ms: "
            << (o.trials ? total / static_cast<double>(o.trials) : 0.0) << "\n";
  return kExitOk;
}

int dispatch(const Options& o) {
  if (o.command == "validate-algebra") return run_validate(o);
  if (o.command == "oracle-check") return run_oracle_check(o);
  if (o.file.empty()) throw ProblemError("command '" + o.command + "' needs a problem file");
  if (o.command == "bench") return run_bench(o);
  Problem p = load_problem(o);
  if (o.command == "mono-complete") return run_mono_complete(o, p);
  if (o.command == "mora-nf") return run_mora_nf(o, p);
  if (o.command == "complete" || o.command == "nf") {
    const bool nf = o.command == "nf";
    if (p.coeff == "int") return nf ? run_nf<Integer>(o, p) : run_complete<Integer>(o, p);
    if (p.coeff == "qpoly") return nf ? run_nf<QPoly>(o, p) : run_complete<QPoly>(o, p);
    return nf ? run_nf<Rational>(o, p) : run_complete<Rational>(o, p);
  }
  throw ProblemError("unknown command '" + o.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Involutive bases for polynomial algebras of solvable type"};
  Options o;
  app.add_option("command", o.command,
                 "complete | mono-complete | nf | mora-nf | oracle-check | validate-algebra | bench")
      ->required()
      ->check(CLI::IsMember({"complete", "mono-complete", "nf", "mora-nf", "oracle-check", "validate-algebra", "bench"}));
  app.add_option("file", o.file, "problem file");
  app.add_option("--division", o.division, "janet | pommaret")->check(CLI::IsMember({"janet", "pommaret"}));
  app.add_option("--order", o.order, "order tokens, e.g. \"weight -1 0 1 0 refine degrevlex\"");
  app.add_option("--algebra", o.algebra, "algebra tokens, e.g. \"weyl 3\"");
  app.add_option("--local", o.local, "mora | homog")->check(CLI::IsMember({"mora", "homog"}));
  app.add_option("--coeff", o.coeff, "int | qpoly")->check(CLI::IsMember({"rational", "int", "qpoly"}));
  app.add_flag("--two-sided", o.two_sided, "two-sided ideal as a left basis");
  app.add_flag("--minimal", o.minimal, "reduce tails and normalise");
  app.add_flag("--trace", o.trace, "print the completion log");
  app.add_flag("--strong-janet", o.strong_janet, "strong variant of the homogenisation pipeline");
  app.add_flag("--allow-iterated", o.allow_iterated, "permit Pommaret Mora normal forms on iterated algebras");
  app.add_flag("--json", o.json, "structured output");
  app.add_flag("--repr", o.repr, "print the standard representation");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--trials", o.trials, "number of trials");
  app.add_option("--cap", o.cap, "insertion cap for the completions");
  CLI11_PARSE(app, argc, argv);
  try {
    return dispatch(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ProblemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.report().empty()) std::cerr << e.report();
    return kExitUsage;
  } catch (const StepCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
