#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "support/generators.hpp"
#include "tropres/cli.hpp"
#include "tropres/error.hpp"
#include "tropres/paper_suite.hpp"
#include "tropres/parse.hpp"

using namespace tropres;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_poly coefficient form") {
  CHECK(parse_poly("0,5,8,9").to_string() == "0,5,8,9");
  CHECK(parse_poly(" 0 , 1/2 , -inf ").to_string() == "0,1/2,-inf");
  CHECK(parse_poly("+3,-2/4").to_string() == "3,-1/2");
}

TEST_CASE("parse_poly root form") {
  CHECK(parse_poly("roots: 5 > 3 > 1") == parse_poly("0,5,8,9"));
  CHECK(parse_poly("2 * roots: 3 >= 3") == parse_poly("2,5,8"));
  CHECK(parse_poly("roots: 1/2") == parse_poly("0,1/2"));
}

TEST_CASE("parse_poly errors") {
  auto expect = [](const char* text, ErrorKind kind, std::size_t offset) {
    try {
      parse_poly(text);
      FAIL("accepted " << text);
    } catch (const ParseError& e) {
      CHECK(e.kind() == kind);
      CHECK(e.offset() == offset);
    }
  };
  expect("", ErrorKind::ParseError, 0);
  expect("0,,1", ErrorKind::ParseError, 2);
  expect("0,x", ErrorKind::ParseError, 2);
  expect("1/0", ErrorKind::ParseError, 2);
  expect("-inf,1", ErrorKind::LeadingZeroError, 0);
  expect("roots: 3 > 3", ErrorKind::ParseError, 9);
  expect("roots: 1 > 3", ErrorKind::ParseError, 9);
  CHECK_THROWS_AS(parse_rational_poly("1,,2"), ParseError);
}

TEST_CASE("property: printing and parsing round-trip") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> deg(0, 6);
  std::uniform_int_distribution<int> hole(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<TropicalScalar> c(deg(rng) + 1);
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = (i > 0 && hole(rng) == 0) ? TropicalScalar::neg_inf() : TropicalScalar(testing::random_rational(rng));
    const TropicalPolynomial p(c);
    CHECK(parse_poly(p.to_string()) == p);
  }
}

TEST_CASE("run: exit codes") {
  CHECK(invoke({"order", "-A", "0,5,8,9", "-B", "0,5,6"}).code == kExitOk);
  CHECK(invoke({"verify", "-A", "0,5,8,9", "-B", "0,5,6"}).code == kExitOk);
  CHECK(invoke({"verify", "-A", "0,3", "-B", "0,2,6"}).code == kExitAssumptionViolated);
  CHECK(invoke({"order", "-A", "0,x", "-B", "0,1"}).code == kExitUsage);
  CHECK(invoke({"order", "-A", "0,1"}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"resultant", "-A", "0,1", "-B", "0,1", "--method", "magic"}).code == kExitUsage);
  CHECK(invoke({"order", "-A", "0,1,-inf", "-B", "0,-inf"}).code == kExitDomainError);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("run: JSON output is deterministic") {
  const std::vector<std::string> args{"--json", "order", "-A", "0,5,8,9", "-B", "0,5,6"};
  const auto first = invoke(args);
  CHECK(first.out == "{\"resultant\":\"24\",\"maximizers\":4,\"order_log2\":2.0,\"power_of_two\":true,\"k\":2}\n");
  for (int i = 0; i < 5; ++i) CHECK(invoke(args).out == first.out);

  const auto b2 = nlohmann::json::parse(invoke({"--json", "order", "-A", "0,3", "-B", "0,3,6"}).out);
  CHECK(b2["maximizers"] == 3);
  CHECK(b2["k"].is_null());
  CHECK(b2["power_of_two"] == false);

  const auto v = nlohmann::json::parse(invoke({"verify", "-A", "0,5,8,9", "-B", "0,5,6", "--json"}).out);
  CHECK(v["theta"] == 4);
  CHECK(v["holds"] == true);
}

TEST_CASE("run: subcommands produce their reports") {
  const auto roots = invoke({"roots", "-A", "0,5,8,9"});
  CHECK(roots.code == 0);
  CHECK(roots.out.find("root 3 multiplicity 1") != std::string::npos);

  const auto res = invoke({"resultant", "-A", "0,5,8,9", "-B", "0,5,6", "--method", "brute", "--check"});
  CHECK(res.code == 0);
  CHECK(res.out.find("resultant 24") != std::string::npos);

  const auto sym = invoke({"symbolic", "-m", "1", "-n", "2"});
  CHECK(sym.code == 0);
  CHECK(sym.out.find("-1 * a0 a1 b1") != std::string::npos);

  const auto cls = nlohmann::json::parse(invoke({"--json", "classical", "-p", "1,-3,2", "-q", "1,-4,3"}).out);
  CHECK(cls["gcd_degree"] == 1);
  CHECK(cls["resultant_order"] == 1);
  CHECK(cls["agrees"] == true);

  const auto seeded = invoke({"--seed", "7", "classical", "-p", "1,-3,2", "-q", "1,-3,2"});
  CHECK(seeded.code == 0);
  CHECK(seeded.out == invoke({"--seed", "7", "classical", "-p", "1,-3,2", "-q", "1,-3,2"}).out);
}

TEST_CASE("run: enumeration budget from flag and environment") {
  const std::vector<std::string> order{"order", "-A", "0,5,8,9", "-B", "0,5,6"};
  auto with_flag = order;
  with_flag.insert(with_flag.begin(), {"--max-enum", "3"});
  CHECK(invoke(with_flag).code == kExitDomainError);

  ::setenv("TROPRES_MAX_ENUM", "3", 1);
  CHECK(invoke(order).code == kExitDomainError);
  auto overridden = order;
  overridden.insert(overridden.begin(), {"--max-enum", "100"});
  CHECK(invoke(overridden).code == kExitOk);
  ::unsetenv("TROPRES_MAX_ENUM");
  CHECK(invoke(order).code == kExitOk);
}

TEST_CASE("bundled worked examples all pass") {
  const auto cases = run_paper_suite();
  CHECK(cases.size() >= 20);
  for (const auto& c : cases) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(invoke({"paper-suite"}).code == kExitOk);
}
