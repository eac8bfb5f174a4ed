#include "tropres/polynomial.hpp"

#include <algorithm>

#include "tropres/error.hpp"

namespace tropres {

TropicalPolynomial::TropicalPolynomial(std::vector<TropicalScalar> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidPolynomial, "no coefficients");
  if (coeffs_.front().is_neg_inf())
    throw Error(ErrorKind::InvalidPolynomial, "leading coefficient is -inf");
}

std::string TropicalPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].to_string();
  }
  return out;
}

std::size_t RootList::total_multiplicity() const {
  std::size_t total = zero_root_multiplicity;
  for (const auto& r : finite_roots) total += r.multiplicity;
  return total;
}

TropicalScalar evaluate(const TropicalPolynomial& p, const TropicalScalar& x) {
  const std::size_t d = p.degree();
  TropicalScalar best = TropicalScalar::neg_inf();
  for (std::size_t i = 0; i <= d; ++i)
    best = trop_add(best, trop_mul(p[i], trop_pow(x, d - i)));
  return best;
}

RootList roots(const TropicalPolynomial& p) {
  struct Point {
    long exponent;
    Rational height;
  };
  const std::size_t d = p.degree();

  // Ascending exponent order: walk coefficients from the constant term up.
  std::vector<Point> pts;
  for (std::size_t i = d + 1; i-- > 0;)
    if (p[i].is_finite()) pts.push_back({static_cast<long>(d - i), p[i].value()});

  // Monotone chain upper hull; points on or below a chord are dropped.
  std::vector<Point> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const Rational cross = Rational(a.exponent - o.exponent) * (q.height - o.height) -
                             Rational(q.exponent - o.exponent) * (a.height - o.height);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }

  RootList out;
  out.zero_root_multiplicity = static_cast<std::size_t>(pts.front().exponent);
  for (std::size_t k = hull.size(); k-- > 1;) {
    const auto& lo = hull[k - 1];
    const auto& hi = hull[k];
    const long len = hi.exponent - lo.exponent;
    Rational corner = (lo.height - hi.height) / len;
    corner.canonicalize();
    out.finite_roots.push_back({TropicalScalar(corner), static_cast<std::size_t>(len)});
  }
  return out;
}

TropicalPolynomial from_roots(const TropicalScalar& leading, std::span<const TropicalScalar> roots) {
  if (leading.is_neg_inf()) throw Error(ErrorKind::InvalidPolynomial, "leading coefficient is -inf");
  std::vector<TropicalScalar> coeffs{leading};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].is_neg_inf()) throw Error(ErrorKind::UnsortedRoots, "root list contains -inf");
    if (i > 0 && roots[i - 1] < roots[i])
      throw Error(ErrorKind::UnsortedRoots, "roots increase at position " + std::to_string(i));
    coeffs.push_back(trop_mul(coeffs.back(), roots[i]));
  }
  return TropicalPolynomial(std::move(coeffs));
}

TropicalPolynomial make_monic(const TropicalPolynomial& p) {
  std::vector<TropicalScalar> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(trop_div(c, p.leading()));
  return TropicalPolynomial(std::move(coeffs));
}

bool is_simple_nonzero(const TropicalPolynomial& p) {
  const RootList r = roots(p);
  return r.zero_root_multiplicity == 0 &&
         std::all_of(r.finite_roots.begin(), r.finite_roots.end(),
                     [](const Root& x) { return x.multiplicity == 1; });
}

std::vector<TropicalScalar> common_roots(const TropicalPolynomial& a, const TropicalPolynomial& b) {
  if (!is_simple_nonzero(a) || !is_simple_nonzero(b))
    throw Error(ErrorKind::AssumptionViolated, "both polynomials need simple non-zero roots");
  const auto ra = root_sequence(a);
  const auto rb = root_sequence(b);
  std::vector<TropicalScalar> out;
  std::size_t i = 0, j = 0;
  while (i < ra.size() && j < rb.size()) {
    if (ra[i] == rb[j]) {
      out.push_back(ra[i]);
      ++i;
      ++j;
    } else if (ra[i] > rb[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

std::vector<TropicalScalar> root_sequence(const TropicalPolynomial& p) {
  std::vector<TropicalScalar> out;
  for (const auto& r : roots(p).finite_roots)
    out.insert(out.end(), r.multiplicity, r.value);
  return out;
}

}  // namespace tropres
