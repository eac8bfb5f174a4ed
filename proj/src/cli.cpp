#include "tropres/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>

#include "tropres/classical.hpp"
#include "tropres/error.hpp"
#include "tropres/paper_suite.hpp"
#include "tropres/parse.hpp"
#include "tropres/report.hpp"
#include "tropres/sylvester.hpp"
#include "tropres/symbolic.hpp"

namespace tropres {

namespace {

struct Options {
  bool json = false;
  std::optional<std::uint64_t> max_enum;
  std::uint64_t seed = 1;
  std::string a, b;
  std::string method = "assignment";
  bool check = false;
  bool witnesses = false;
  std::size_t m = 0, n = 0;
  std::string p, q;
  std::size_t trials = 3;
};

EnumerationBudget budget_from(const Options& o) {
  EnumerationBudget budget;
  if (o.max_enum) {
    budget.max_count = *o.max_enum;
  } else if (const char* env = std::getenv("TROPRES_MAX_ENUM")) {
    try {
      budget.max_count = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(ErrorKind::ParseError, 0, "unsigned integer in TROPRES_MAX_ENUM");
    }
  }
  return budget;
}

void print_roots(std::ostream& out, const RootList& r) {
  for (const auto& root : r.finite_roots)
    out << "root " << root.value << " multiplicity " << root.multiplicity << '\n';
  out << "root -inf multiplicity " << r.zero_root_multiplicity << '\n';
}

void print_report(std::ostream& out, const OrderReport& r) {
  out << "resultant   " << r.resultant_value << '\n'
      << "maximizers  " << r.maximizer_count << '\n'
      << "order       ";
  if (r.k_if_integral)
    out << *r.k_if_integral << '\n';
  else
    out << "log2(" << r.maximizer_count << ") = " << std::setprecision(6) << r.order_log2 << '\n';
}

int cmd_roots(const Options& o, std::ostream& out) {
  const auto p = parse_poly(o.a);
  const auto r = roots(p);
  if (o.json) {
    Json j;
    j["polynomial"] = p.to_string();
    j["roots"] = to_json(r);
    j["simple_nonzero"] = is_simple_nonzero(p);
    out << j.dump() << '\n';
  } else {
    out << "polynomial " << p.to_string() << '\n';
    print_roots(out, r);
    out << "simple non-zero: " << (is_simple_nonzero(p) ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int cmd_sylvester(const Options& o, std::ostream& out) {
  const auto m = build_sylvester(parse_poly(o.a), parse_poly(o.b));
  if (o.json)
    out << to_json(m).dump() << '\n';
  else
    out << to_string(m);
  return kExitOk;
}

int cmd_resultant(const Options& o, std::ostream& out) {
  const auto m = build_sylvester(parse_poly(o.a), parse_poly(o.b));
  const auto budget = budget_from(o);
  auto compute = [&](const std::string& method) {
    if (method == "brute") return permanent_brute(m);
    if (method == "sstar") return permanent_sstar(m, budget);
    return permanent_assignment(m);
  };
  const TropicalScalar value = compute(o.method);

  Json checks = Json::object();
  bool agree = true;
  if (o.check) {
    for (const std::string method : {"brute", "sstar", "assignment"}) {
      if (method == "brute" && m.dim() > 9) continue;
      const TropicalScalar other = compute(method);
      checks[method] = other.to_string();
      agree = agree && other == value;
    }
  }
  if (o.json) {
    Json j;
    j["resultant"] = value.to_string();
    j["method"] = o.method;
    if (o.check) {
      j["check"] = checks;
      j["agree"] = agree;
    }
    out << j.dump() << '\n';
  } else {
    out << "resultant " << value << " (" << o.method << ")\n";
    if (o.check) {
      for (const auto& [method, v] : checks.items()) out << "  " << method << ' ' << v.get<std::string>() << '\n';
      out << (agree ? "methods agree" : "METHODS DISAGREE") << '\n';
    }
  }
  return agree ? kExitOk : kExitVerdictFails;
}

int cmd_order(const Options& o, std::ostream& out) {
  const auto a = parse_poly(o.a);
  const auto b = parse_poly(o.b);
  const auto m = build_sylvester(a, b);
  const auto budget = budget_from(o);
  const auto report = count_maximizers(m, budget);
  if (o.json) {
    Json j = to_json(report);
    if (o.witnesses) {
      Json w = Json::array();
      for (const auto& s : maximizing_splits(m, budget)) w.push_back(to_json(s));
      j["witnesses"] = std::move(w);
    }
    out << j.dump() << '\n';
  } else {
    print_report(out, report);
    if (o.witnesses)
      for (const auto& s : maximizing_splits(m, budget)) out << "  " << to_string(s) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto a = parse_poly(o.a);
  const auto b = parse_poly(o.b);
  const auto v = verify_main_theorem(a, b, budget_from(o));
  if (o.json) {
    out << to_json(v).dump() << '\n';
  } else {
    out << "common roots k = " << v.k << '\n'
        << "maximizers theta = " << v.theta << '\n'
        << (v.holds ? "theta = 2^k holds" : "theta != 2^k") << '\n';
  }
  return v.holds ? kExitOk : kExitVerdictFails;
}

int cmd_symbolic(const Options& o, std::ostream& out) {
  std::size_t m = o.m, n = o.n;
  std::optional<TropicalPolynomial> a, b;
  if (!o.a.empty() || !o.b.empty()) {
    if (o.a.empty() || o.b.empty()) throw ParseError(ErrorKind::ParseError, 0, "both -A and -B");
    a = parse_poly(o.a);
    b = parse_poly(o.b);
    m = a->degree();
    n = b->degree();
  }
  const auto names = resultant_variable_names(m, n);
  const auto r = symbolic_resultant(m, n);
  if (!a) {
    if (o.json) {
      out << to_json(r, names).dump() << '\n';
    } else {
      for (const auto& line : format_terms(r, names)) out << line << '\n';
    }
    return kExitOk;
  }
  const auto values = resultant_term_values(m, n, a->coeffs(), b->coeffs());
  if (o.json) {
    Json terms = Json::array();
    for (const auto& t : values) {
      Json e;
      e["monomial"] = format_monomial(t.monomial, names);
      e["value"] = t.value.to_string();
      terms.push_back(std::move(e));
    }
    out << terms.dump() << '\n';
  } else {
    for (const auto& t : values) out << std::setw(8) << t.value.to_string() << "  " << format_monomial(t.monomial, names) << '\n';
  }
  return kExitOk;
}

int cmd_classical(const Options& o, std::ostream& out) {
  const auto p = parse_rational_poly(o.p);
  const auto q = parse_rational_poly(o.q);
  const std::size_t m = o.m ? o.m : static_cast<std::size_t>(std::max(p.degree(), 1L));
  const std::size_t n = o.n ? o.n : static_cast<std::size_t>(std::max(q.degree(), 1L));
  const auto order = resultant_order_at(p, q, m, n, o.trials, o.seed);
  const bool both_zero = p.is_zero() && q.is_zero();
  const std::size_t gcd_degree = both_zero ? m + n : homogeneous_gcd_degree(p, q, m, n);
  const bool agrees = gcd_degree == order.order;
  if (o.json) {
    Json j;
    j["gcd_degree"] = gcd_degree;
    j["resultant_order"] = order.order;
    j["agrees"] = agrees;
    out << j.dump() << '\n';
  } else {
    out << "gcd degree       " << gcd_degree << '\n'
        << "resultant order  " << order.order << '\n'
        << (agrees ? "agrees" : "DISAGREES") << '\n';
  }
  return agrees ? kExitOk : kExitVerdictFails;
}

int cmd_paper_suite(const Options& o, std::ostream& out) {
  const auto results = run_paper_suite();
  const bool all = std::all_of(results.begin(), results.end(), [](const SuiteCase& c) { return c.passed; });
  if (o.json) {
    Json cases = Json::array();
    for (const auto& c : results) {
      Json j;
      j["name"] = c.name;
      j["passed"] = c.passed;
      if (!c.passed) j["detail"] = c.detail;
      cases.push_back(std::move(j));
    }
    Json j;
    j["passed"] = all;
    j["cases"] = std::move(cases);
    out << j.dump() << '\n';
  } else {
    for (const auto& c : results) {
      out << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
      if (!c.passed) out << " -- " << c.detail;
      out << '\n';
    }
  }
  return all ? kExitOk : kExitVerdictFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical univariate resultants: roots, orders and the common-root count"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--max-enum", o.max_enum, "Split-permutation budget (env TROPRES_MAX_ENUM)");
  app.add_option("--seed", o.seed, "Seed for the field-case random draws");

  const char* poly_help = "Polynomial, leading coefficient first: 0,5,8,9 or 'roots: 5 > 3 > 1'";
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("-A", o.a, poly_help)->required();
    sub->add_option("-B", o.b, poly_help)->required();
  };

  auto* roots_cmd = app.add_subcommand("roots", "Corner roots with multiplicities");
  roots_cmd->add_option("-A", o.a, poly_help)->required();

  auto* sylvester_cmd = app.add_subcommand("sylvester", "Tropical Sylvester matrix");
  add_pair(sylvester_cmd);

  auto* resultant_cmd = app.add_subcommand("resultant", "Tropical permanent of the Sylvester matrix");
  add_pair(resultant_cmd);
  resultant_cmd->add_option("--method", o.method, "brute | sstar | assignment")
      ->check(CLI::IsMember({"brute", "sstar", "assignment"}));
  resultant_cmd->add_flag("--check", o.check, "Cross-check against the other methods");

  auto* order_cmd = app.add_subcommand("order", "Maximizer count and order of the resultant");
  add_pair(order_cmd);
  order_cmd->add_flag("--witnesses", o.witnesses, "List maximizing split permutations");

  auto* verify_cmd = app.add_subcommand("verify", "Check #maximizers = 2^(#common roots)");
  add_pair(verify_cmd);

  auto* symbolic_cmd = app.add_subcommand("symbolic", "Integer resultant, or its term values at -A/-B");
  symbolic_cmd->add_option("-m", o.m, "Degree of A");
  symbolic_cmd->add_option("-n", o.n, "Degree of B");
  symbolic_cmd->add_option("-A", o.a, poly_help);
  symbolic_cmd->add_option("-B", o.b, poly_help);

  auto* classical_cmd = app.add_subcommand("classical", "Field-case order of the resultant vs gcd degree");
  classical_cmd->add_option("-p", o.p, "Rational polynomial, leading first, e.g. 1,-3,2")->required();
  classical_cmd->add_option("-q", o.q, "Rational polynomial, leading first")->required();
  classical_cmd->add_option("-m", o.m, "Formal degree of p (default: its degree)");
  classical_cmd->add_option("-n", o.n, "Formal degree of q (default: its degree)");
  classical_cmd->add_option("--trials", o.trials, "Independent random draws")->check(CLI::PositiveNumber);

  auto* suite_cmd = app.add_subcommand("paper-suite", "Run the bundled worked examples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*roots_cmd) return cmd_roots(o, out);
    if (*sylvester_cmd) return cmd_sylvester(o, out);
    if (*resultant_cmd) return cmd_resultant(o, out);
    if (*order_cmd) return cmd_order(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*symbolic_cmd) {
      if (o.a.empty() && (o.m == 0 || o.n == 0)) {
        err << "symbolic: give -m and -n, or -A and -B\n";
        return kExitUsage;
      }
      return cmd_symbolic(o, out);
    }
    if (*classical_cmd) return cmd_classical(o, out);
    if (*suite_cmd) return cmd_paper_suite(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::AssumptionViolated ? kExitAssumptionViolated : kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace tropres
