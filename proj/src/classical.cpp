#include "tropres/classical.hpp"

#include <algorithm>
#include <random>

#include "tropres/error.hpp"

namespace tropres {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  coeffs_.erase(coeffs_.begin(), first);
  for (auto& c : coeffs_) c.canonicalize();
}

Rational RationalPoly::coeff_of_power(std::size_t k) const {
  if (static_cast<long>(k) > degree()) return 0;
  return coeffs_[coeffs_.size() - 1 - k];
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (const auto& c : coeffs_) acc = acc * x + c;
  return acc;
}

std::vector<Rational> RationalPoly::padded(std::size_t degree) const {
  if (static_cast<long>(degree) < this->degree())
    throw Error(ErrorKind::PreconditionViolated, "polynomial exceeds the formal degree");
  std::vector<Rational> out(degree + 1 - coeffs_.size(), Rational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

namespace {

// Ascending-order helpers keep the arithmetic index-aligned.
std::vector<Rational> ascending(const RationalPoly& p) {
  return {p.coeffs().rbegin(), p.coeffs().rend()};
}

RationalPoly from_ascending(std::vector<Rational> c) {
  std::reverse(c.begin(), c.end());
  return RationalPoly(std::move(c));
}

}  // namespace

RationalPoly operator+(const RationalPoly& x, const RationalPoly& y) {
  auto a = ascending(x), b = ascending(y);
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return from_ascending(std::move(a));
}

RationalPoly operator-(const RationalPoly& x, const RationalPoly& y) {
  auto a = ascending(x), b = ascending(y);
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return from_ascending(std::move(a));
}

RationalPoly operator*(const RationalPoly& x, const RationalPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const auto a = ascending(x), b = ascending(y);
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return from_ascending(std::move(c));
}

DivMod divmod(const RationalPoly& x, const RationalPoly& y) {
  if (y.is_zero()) throw Error(ErrorKind::PreconditionViolated, "division by the zero polynomial");
  auto rem = ascending(x);
  const auto div = ascending(y);
  const std::size_t dy = div.size() - 1;
  if (rem.size() <= dy) return {RationalPoly(), x};
  std::vector<Rational> quo(rem.size() - dy, Rational(0));
  for (std::size_t k = rem.size(); k-- > dy;) {
    const Rational factor = rem[k] / div[dy];
    quo[k - dy] = factor;
    for (std::size_t j = 0; j <= dy; ++j) rem[k - dy + j] -= factor * div[j];
  }
  rem.resize(dy);
  return {from_ascending(std::move(quo)), from_ascending(std::move(rem))};
}

RationalPoly make_monic(const RationalPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> c = p.coeffs();
  const Rational lead = c.front();
  for (auto& x : c) x /= lead;
  return RationalPoly(std::move(c));
}

RationalPoly rational_gcd(const RationalPoly& p, const RationalPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  RationalPoly a = p, b = q;
  while (!b.is_zero()) {
    RationalPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Rational sylvester_determinant(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::PreconditionViolated, "empty coefficient list");
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const std::size_t dim = m + n;
  if (dim == 0) return 1;

  std::vector<std::vector<Rational>> mat(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) mat[i][i + k] = a[k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) mat[n + i][i + k] = b[k];

  // Bareiss elimination: every division below is exact.
  Rational prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (mat[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < dim && mat[r][k] == 0) ++r;
      if (r == dim) return 0;
      std::swap(mat[k], mat[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  Rational det = mat[dim - 1][dim - 1];
  return negate ? Rational(-det) : det;
}

Rational numeric_resultant(const RationalPoly& p, const RationalPoly& q) {
  if (p.degree() < 1 || q.degree() < 1)
    throw Error(ErrorKind::DegreeZero, "both polynomials need degree at least 1");
  return sylvester_determinant(p.coeffs(), q.coeffs());
}

RationalPoly resultant_pencil(const RationalPoly& p, const RationalPoly& q, const RationalPoly& f,
                              const RationalPoly& g, std::size_t m, std::size_t n) {
  const auto pc = p.padded(m), qc = q.padded(n), fc = f.padded(m), gc = g.padded(n);
  const std::size_t nodes = m + n + 1;

  std::vector<Rational> diff(nodes);
  std::vector<Rational> a(m + 1), b(n + 1);
  for (std::size_t t = 0; t < nodes; ++t) {
    for (std::size_t i = 0; i <= m; ++i) a[i] = pc[i] + t * fc[i];
    for (std::size_t i = 0; i <= n; ++i) b[i] = qc[i] + t * gc[i];
    diff[t] = sylvester_determinant(a, b);
  }

  // Newton forward differences on the nodes 0..N:
  // r(t) = sum_k diff^k r(0) / k! * t (t - 1) ... (t - k + 1).
  std::vector<Rational> result(nodes, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // ascending coefficients
  Rational factorial = 1;
  for (std::size_t k = 0; k < nodes; ++k) {
    if (k > 0) {
      factorial *= k;
      // basis *= (t - (k - 1))
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * (k - 1);
      }
      basis = std::move(next);
    }
    const Rational c = diff[0] / factorial;
    if (c != 0)
      for (std::size_t i = 0; i < basis.size(); ++i) result[i] += c * basis[i];
    for (std::size_t i = 0; i + k + 1 < nodes; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  std::reverse(result.begin(), result.end());
  return RationalPoly(std::move(result));
}

std::size_t valuation(const RationalPoly& r) {
  if (r.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "valuation of the zero polynomial");
  std::size_t k = 0;
  while (r.coeff_of_power(k) == 0) ++k;
  return k;
}

namespace {

RationalPoly random_poly(std::size_t degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-1'000'000, 1'000'000);
  std::vector<Rational> c(degree + 1);
  do {
    c[0] = coeff(rng);
  } while (c[0] == 0);
  for (std::size_t i = 1; i <= degree; ++i) c[i] = coeff(rng);
  return RationalPoly(std::move(c));
}

constexpr std::size_t kMaxRedraws = 16;

}  // namespace

ResultantOrder resultant_order_at(const RationalPoly& p, const RationalPoly& q, std::size_t m,
                                  std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (m == 0 || n == 0) throw Error(ErrorKind::DegreeZero, "formal degrees must be at least 1");
  if (p.degree() > static_cast<long>(m) || q.degree() > static_cast<long>(n))
    throw Error(ErrorKind::PreconditionViolated, "polynomial exceeds its formal degree");
  if (trials == 0) throw Error(ErrorKind::PreconditionViolated, "at least one trial is needed");

  ResultantOrder out;
  if (p.is_zero() && q.is_zero()) {
    out.order = m + n;
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::size_t attempts = 0;
    for (;;) {
      const RationalPoly f = random_poly(m, rng);
      const RationalPoly g = random_poly(n, rng);
      const RationalPoly r = resultant_pencil(p, q, f, g, m, n);
      if (!r.is_zero()) {
        out.trial_valuations.push_back(valuation(r));
        break;
      }
      ++out.redraws;
      if (++attempts == kMaxRedraws)
        throw Error(ErrorKind::DegenerateDraw, "resultant pencil vanished identically " +
                                                   std::to_string(attempts) + " times");
    }
  }
  out.order = *std::min_element(out.trial_valuations.begin(), out.trial_valuations.end());
  return out;
}

std::size_t homogeneous_gcd_degree(const RationalPoly& p, const RationalPoly& q, std::size_t m,
                                   std::size_t n) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  if (q.is_zero()) return m;
  if (p.is_zero()) return n;
  const std::size_t affine = static_cast<std::size_t>(rational_gcd(p, q).degree());
  const std::size_t drop_p = m - static_cast<std::size_t>(p.degree());
  const std::size_t drop_q = n - static_cast<std::size_t>(q.degree());
  return affine + std::min(drop_p, drop_q);
}

}  // namespace tropres
