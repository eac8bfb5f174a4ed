#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "tropres/classical.hpp"
#include "tropres/error.hpp"
#include "tropres/parse.hpp"

using namespace tropres;

namespace {

RationalPoly rp(const char* text) { return parse_rational_poly(text); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

RationalPoly from_roots(const std::vector<int>& roots) {
  RationalPoly p({Rational(1)});
  for (int r : roots) p = p * RationalPoly({Rational(1), Rational(-r)});
  return p;
}

}  // namespace

TEST_CASE("RationalPoly basics") {
  const RationalPoly p({0, 0, 1, 2});
  CHECK(p.degree() == 1);
  CHECK(p.coeffs() == std::vector<Rational>{1, 2});
  CHECK(RationalPoly().degree() == -1);
  CHECK(rp("0").is_zero());
  CHECK(rp("1,-3,2").evaluate(2) == 0);
  CHECK(rp("1,2").coeff_of_power(0) == 2);
  CHECK(rp("1,2").coeff_of_power(5) == 0);
  CHECK(rp("1,2").padded(3) == std::vector<Rational>{0, 0, 1, 2});
  CHECK((rp("1,1") * rp("1,-1")) == rp("1,0,-1"));
  CHECK((rp("1,1") - rp("1,1")).is_zero());
  const auto dm = divmod(rp("1,0,-1"), rp("1,1"));
  CHECK(dm.quotient == rp("1,-1"));
  CHECK(dm.remainder.is_zero());
  CHECK(kind_of([] { divmod(rp("1"), RationalPoly()); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("rational_gcd") {
  CHECK(rational_gcd(rp("1,-3,2"), rp("1,-4,3")) == rp("1,-1"));
  CHECK(rational_gcd(rp("2,-6,4"), rp("0")) == rp("1,-3,2"));
  CHECK(rational_gcd(rp("1,1"), rp("1,-1")) == rp("1"));
  CHECK(kind_of([] { rational_gcd(RationalPoly(), RationalPoly()); }) == ErrorKind::BothZero);
}

TEST_CASE("numeric_resultant") {
  CHECK(numeric_resultant(rp("1,1"), rp("1,2")) == 1);
  CHECK(numeric_resultant(rp("1,-3,2"), rp("1,-4,3")) == 0);
  CHECK(numeric_resultant(rp("1,0,-1"), rp("1,0,1")) == 4);
  CHECK(kind_of([] { numeric_resultant(rp("3"), rp("1,1")); }) == ErrorKind::DegreeZero);

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-7, 7);
  std::uniform_int_distribution<std::size_t> deg(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> a(deg(rng) + 1), b(deg(rng) + 1);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    a[0] = a[0] == 0 ? 1 : a[0];
    b[0] = b[0] == 0 ? -1 : b[0];
    CHECK(numeric_resultant(RationalPoly(a), RationalPoly(b)) ==
          testing::leibniz_determinant(testing::sylvester_rows(a, b)));
    CHECK(sylvester_determinant(a, b) == testing::leibniz_determinant(testing::sylvester_rows(a, b)));
  }
}

TEST_CASE("resultant_pencil is the interpolated polynomial") {
  const auto p = rp("1,-3,2"), q = rp("1,-4,3"), f = rp("2,1,5"), g = rp("-1,3,7");
  const auto r = resultant_pencil(p, q, f, g, 2, 2);
  CHECK(r.degree() <= 4);
  for (int t : {-3, 7, 11}) {
    const auto pt = p + RationalPoly({Rational(t)}) * f;
    const auto qt = q + RationalPoly({Rational(t)}) * g;
    CHECK(r.evaluate(t) == sylvester_determinant(pt.padded(2), qt.padded(2)));
  }
  CHECK(valuation(r) == 1);
  CHECK(kind_of([] { valuation(RationalPoly()); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("resultant_order_at examples") {
  CHECK(resultant_order_at(rp("1,-3,2"), rp("1,-4,3"), 2, 2, 3, 1).order == 1);
  CHECK(resultant_order_at(rp("1,-3,2"), rp("1,-3,2"), 2, 2, 3, 1).order == 2);
  CHECK(resultant_order_at(rp("1,1"), rp("1,2"), 1, 1, 3, 1).order == 0);
  CHECK(resultant_order_at(RationalPoly(), RationalPoly(), 3, 2, 3, 1).order == 5);
  // degree drop on both sides shares the point at infinity
  CHECK(resultant_order_at(rp("1,1"), rp("1,2"), 2, 2, 3, 1).order == 1);
  CHECK(homogeneous_gcd_degree(rp("1,1"), rp("1,2"), 2, 2) == 1);
  CHECK(homogeneous_gcd_degree(RationalPoly(), rp("1,2"), 2, 2) == 2);
}

TEST_CASE("property: planted gcd degree equals the resultant order") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> root(-20, 20);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t delta = trial % 4;
    std::vector<int> shared, only_p, only_q;
    std::set<int> used;
    auto fresh = [&] {
      int r;
      do r = root(rng);
      while (!used.insert(r).second);
      return r;
    };
    for (std::size_t i = 0; i < delta; ++i) shared.push_back(fresh());
    for (std::size_t i = 0, extra = 1 + trial % 3; i < extra; ++i) only_p.push_back(fresh());
    for (std::size_t i = 0, extra = trial % 2; i < extra; ++i) only_q.push_back(fresh());
    auto proots = shared, qroots = shared;
    proots.insert(proots.end(), only_p.begin(), only_p.end());
    qroots.insert(qroots.end(), only_q.begin(), only_q.end());
    if (qroots.empty()) qroots.push_back(fresh());
    const auto p = from_roots(proots), q = from_roots(qroots);
    const auto m = static_cast<std::size_t>(p.degree()), n = static_cast<std::size_t>(q.degree());
    const auto g = rational_gcd(p, q);
    CHECK(static_cast<std::size_t>(g.degree()) == delta);
    CHECK(resultant_order_at(p, q, m, n, 3, 100 + trial).order == delta);
  }
}
