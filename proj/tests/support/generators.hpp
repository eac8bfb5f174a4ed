#pragma once

// Random and exhaustive instance generators shared by the unit and
// acceptance suites.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "tropres/polynomial.hpp"
#include "tropres/scalar.hpp"

namespace tropres::testing {

/// Two root lists (descending) with a planted number of shared roots.
struct Instance {
  std::vector<TropicalScalar> alpha;  // roots of A, length m
  std::vector<TropicalScalar> beta;   // roots of B, length n
  TropicalScalar lead_a = TropicalScalar::one();
  TropicalScalar lead_b = TropicalScalar::one();
  std::size_t shared = 0;

  TropicalPolynomial a() const { return from_roots(lead_a, alpha); }
  TropicalPolynomial b() const { return from_roots(lead_b, beta); }
  std::size_t m() const { return alpha.size(); }
  std::size_t n() const { return beta.size(); }
};

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// `count` pairwise distinct random rationals, sorted descending.
inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng, std::size_t count) {
  std::set<Rational> values;
  while (values.size() < count) values.insert(random_rational(rng));
  return {values.rbegin(), values.rend()};
}

/// Slot of a tie pattern: a root of A only, of B only, or one of each tied.
enum class Slot { A, B, Both };
using TiePattern = std::vector<Slot>;

/// Every ordering of m roots of A and n roots of B (all distinct within each
/// polynomial) up to the values themselves: sequences of slots, top to bottom.
inline std::vector<TiePattern> tie_patterns(std::size_t m, std::size_t n) {
  std::vector<TiePattern> out;
  TiePattern cur;
  auto rec = [&](auto&& self, std::size_t ra, std::size_t rb) -> void {
    if (ra == 0 && rb == 0) {
      out.push_back(cur);
      return;
    }
    if (ra > 0) {
      cur.push_back(Slot::A);
      self(self, ra - 1, rb);
      cur.pop_back();
    }
    if (rb > 0) {
      cur.push_back(Slot::B);
      self(self, ra, rb - 1);
      cur.pop_back();
    }
    if (ra > 0 && rb > 0) {
      cur.push_back(Slot::Both);
      self(self, ra - 1, rb - 1);
      cur.pop_back();
    }
  };
  rec(rec, m, n);
  return out;
}

/// Realizes a pattern with the given strictly descending slot values.
inline Instance realize(const TiePattern& pattern, const std::vector<Rational>& values) {
  Instance inst;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const TropicalScalar v(values[i]);
    if (pattern[i] != Slot::B) inst.alpha.push_back(v);
    if (pattern[i] != Slot::A) inst.beta.push_back(v);
    inst.shared += pattern[i] == Slot::Both;
  }
  return inst;
}

/// Uniformly random pattern with exactly `shared` tied slots.
inline TiePattern random_pattern(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t shared) {
  TiePattern p;
  p.insert(p.end(), shared, Slot::Both);
  p.insert(p.end(), m - shared, Slot::A);
  p.insert(p.end(), n - shared, Slot::B);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random instance with degrees m, n and exactly `shared` common roots. When
/// `monic` is false the leading coefficients are random as well.
inline Instance random_instance(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t shared,
                                bool monic = false) {
  const TiePattern pattern = random_pattern(rng, m, n, shared);
  Instance inst = realize(pattern, distinct_rationals(rng, pattern.size()));
  if (!monic) {
    inst.lead_a = TropicalScalar(random_rational(rng));
    inst.lead_b = TropicalScalar(random_rational(rng));
  }
  return inst;
}

}  // namespace tropres::testing
