#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "tropres/error.hpp"
#include "tropres/scalar.hpp"

using namespace tropres;

namespace {

const TropicalScalar kNegInf = TropicalScalar::neg_inf();

TropicalScalar sample(std::mt19937_64& rng) {
  if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) return kNegInf;
  return TropicalScalar(testing::random_rational(rng));
}

}  // namespace

TEST_CASE("trop_add is max with -inf at the bottom") {
  CHECK(trop_add(3, 5) == TropicalScalar(5));
  CHECK(trop_add(kNegInf, 7) == TropicalScalar(7));
  CHECK(trop_add(kNegInf, kNegInf) == kNegInf);
}

TEST_CASE("trop_mul is ordinary addition and -inf annihilates") {
  CHECK(trop_mul(3, 5) == TropicalScalar(8));
  CHECK(trop_mul(0, 9) == TropicalScalar(9));
  CHECK(trop_mul(kNegInf, 5) == kNegInf);
}

TEST_CASE("trop_div") {
  CHECK(trop_div(8, 5) == TropicalScalar(3));
  CHECK(trop_div(kNegInf, 5) == kNegInf);
  try {
    trop_div(5, kNegInf);
    FAIL("expected DivisionByTropicalZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByTropicalZero);
  }
}

TEST_CASE("trop_pow") {
  CHECK(trop_pow(5, 4) == TropicalScalar(20));
  CHECK(trop_pow(kNegInf, 0) == TropicalScalar(0));
  CHECK(trop_pow(3, 1) == TropicalScalar(3));
  CHECK(trop_pow(kNegInf, 3) == kNegInf);
  CHECK(trop_pow(TropicalScalar(Rational(1, 3)), 3) == TropicalScalar(1));
}

TEST_CASE("ordering puts -inf below every finite value") {
  CHECK(kNegInf < TropicalScalar(-1000000));
  CHECK(TropicalScalar(Rational(1, 2)) < TropicalScalar(1));
  CHECK(TropicalScalar(Rational(2, 4)) == TropicalScalar(Rational(1, 2)));
  CHECK(kNegInf == TropicalScalar());
}

TEST_CASE("text form") {
  CHECK(TropicalScalar::parse("-inf").is_neg_inf());
  CHECK(TropicalScalar::parse("6/4") == TropicalScalar(Rational(3, 2)));
  CHECK(TropicalScalar::parse("-7") == TropicalScalar(-7));
  CHECK(TropicalScalar::parse("+7") == TropicalScalar(7));
  CHECK(TropicalScalar(Rational(6, 4)).to_string() == "3/2");
  CHECK(kNegInf.to_string() == "-inf");
  CHECK_THROWS_AS(TropicalScalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(TropicalScalar::parse("inf"), ParseError);
  CHECK_THROWS_AS(TropicalScalar::parse("1.5"), ParseError);
  CHECK_THROWS_AS(TropicalScalar::parse(""), ParseError);
}

TEST_CASE("semiring laws on sampled triples") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = sample(rng), y = sample(rng), z = sample(rng);
    CHECK(trop_add(trop_add(x, y), z) == trop_add(x, trop_add(y, z)));
    CHECK(trop_mul(trop_mul(x, y), z) == trop_mul(x, trop_mul(y, z)));
    CHECK(trop_add(x, y) == trop_add(y, x));
    CHECK(trop_mul(x, y) == trop_mul(y, x));
    CHECK(trop_mul(x, trop_add(y, z)) == trop_add(trop_mul(x, y), trop_mul(x, z)));
    CHECK(trop_add(x, kNegInf) == x);
    CHECK(trop_mul(x, TropicalScalar::one()) == x);
    CHECK(trop_add(x, x) == x);
    if (x <= y) CHECK(trop_mul(x, z) <= trop_mul(y, z));
    if (y.is_finite()) CHECK(trop_div(trop_mul(x, y), y) == x);
  }
}
