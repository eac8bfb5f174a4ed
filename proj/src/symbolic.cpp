#include "tropres/symbolic.hpp"

#include <algorithm>

#include "tropres/error.hpp"

namespace tropres {

void SparseIntPoly::add(const Exponent& exponent, const Integer& coeff) {
  if (exponent.size() != variables_)
    throw Error(ErrorKind::PreconditionViolated, "exponent length mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparseIntPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_)
    throw Error(ErrorKind::PreconditionViolated, "point length mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (unsigned p = 0; p < e[k]; ++p) term *= point[k];
    total += term;
  }
  return total;
}

TropicalScalar TropicalForm::term_value(std::size_t term, std::span<const TropicalScalar> point) const {
  const auto& t = terms.at(term);
  TropicalScalar value = t.coefficient;
  for (std::size_t k = 0; k < t.exponent.size(); ++k)
    if (t.exponent[k] != 0) value = trop_mul(value, trop_pow(point[k], t.exponent[k]));
  return value;
}

SparseIntPoly symbolic_resultant(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw Error(ErrorKind::DegreeZero, "both degrees must be at least 1");
  if (m + n > 8) throw Error(ErrorKind::CapExceeded, "symbolic expansion is limited to m + n <= 8");

  const std::size_t dim = n + m;
  SparseIntPoly out(m + n + 2);
  Exponent exponent(m + n + 2, 0);
  std::vector<bool> used(dim, false);
  std::vector<std::size_t> chosen;

  // Row r < n holds a_{c - r} for c - r in [0, m]; row n + i holds b_{c - i}.
  auto expand = [&](auto&& self, std::size_t row, std::size_t inversions) -> void {
    if (row == dim) {
      out.add(exponent, Integer(inversions % 2 ? -1 : 1));
      return;
    }
    const bool a_row = row < n;
    const std::size_t shift = a_row ? row : row - n;
    const std::size_t width = a_row ? m : n;
    for (std::size_t c = shift; c <= shift + width; ++c) {
      if (used[c]) continue;
      std::size_t above = 0;
      for (auto prev : chosen) above += prev > c;
      const std::size_t var = a_row ? c - shift : m + 1 + (c - shift);
      used[c] = true;
      chosen.push_back(c);
      ++exponent[var];
      self(self, row + 1, inversions + above);
      --exponent[var];
      chosen.pop_back();
      used[c] = false;
    }
  };
  expand(expand, 0, 0);
  return out;
}

TropicalForm tropicalize(const SparseIntPoly& r) {
  if (r.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot tropicalize the zero polynomial");
  TropicalForm f;
  f.variables = r.variables();
  for (const auto& [e, c] : r.terms()) f.terms.push_back({e, TropicalScalar::one()});
  return f;
}

OrderReport order_at(const TropicalForm& f, std::span<const TropicalScalar> point) {
  if (point.size() != f.variables)
    throw Error(ErrorKind::PreconditionViolated, "point has " + std::to_string(point.size()) +
                                                     " coordinates, form has " +
                                                     std::to_string(f.variables) + " variables");
  TropicalScalar best;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    const TropicalScalar v = f.term_value(i, point);
    if (v > best) {
      best = v;
      count = 0;
    }
    if (v == best) ++count;
  }
  if (best.is_neg_inf())
    throw Error(ErrorKind::TropicalZeroResultant, "every term evaluates to -inf");
  return OrderReport::from_count(best, count);
}

std::vector<TermValue> resultant_term_values(std::size_t m, std::size_t n,
                                             std::span<const TropicalScalar> a,
                                             std::span<const TropicalScalar> b) {
  if (a.size() != m + 1 || b.size() != n + 1)
    throw Error(ErrorKind::PreconditionViolated, "coefficient vectors do not match degrees");
  const TropicalForm f = tropicalize(symbolic_resultant(m, n));
  std::vector<TropicalScalar> point(a.begin(), a.end());
  point.insert(point.end(), b.begin(), b.end());

  std::vector<TermValue> out;
  out.reserve(f.terms.size());
  for (std::size_t i = 0; i < f.terms.size(); ++i)
    out.push_back({f.terms[i].exponent, f.term_value(i, point)});
  // terms arrive in descending exponent order; a stable sort keeps it for ties
  std::stable_sort(out.begin(), out.end(),
                   [](const TermValue& x, const TermValue& y) { return x.value > y.value; });
  return out;
}

Exponent split_monomial(std::size_t m, std::size_t n, const SplitPermutation& s) {
  if (s.nu.size() != n || s.mu.size() != m)
    throw Error(ErrorKind::PreconditionViolated, "split does not match degrees");
  Exponent e(m + n + 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.nu[i] < i + 1 || s.nu[i] - (i + 1) > m)
      throw Error(ErrorKind::PreconditionViolated, "split leaves the band");
    ++e[s.nu[i] - (i + 1)];
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (s.mu[j] < j + 1 || s.mu[j] - (j + 1) > n)
      throw Error(ErrorKind::PreconditionViolated, "split leaves the band");
    ++e[m + 1 + s.mu[j] - (j + 1)];
  }
  return e;
}

std::vector<std::string> resultant_variable_names(std::size_t m, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= m; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t j = 0; j <= n; ++j) names.push_back("b" + std::to_string(j));
  return names;
}

std::string format_monomial(const Exponent& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += names.at(k);
    if (e[k] > 1) out += '^' + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::string> format_terms(const SparseIntPoly& r, const std::vector<std::string>& names) {
  std::vector<std::string> lines;
  for (const auto& [e, c] : r.terms()) lines.push_back(c.get_str() + " * " + format_monomial(e, names));
  return lines;
}

}  // namespace tropres
