#include "tropres/sylvester.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tropres/error.hpp"

namespace tropres {

TropicalMatrix::TropicalMatrix(std::size_t dim, std::size_t a_rows)
    : dim_(dim), a_rows_(a_rows), cells_(dim * dim) {
  if (a_rows > dim) throw Error(ErrorKind::PreconditionViolated, "a_rows exceeds dimension");
}

TropicalMatrix TropicalMatrix::from_rows(const std::vector<std::vector<TropicalScalar>>& rows) {
  TropicalMatrix out(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw Error(ErrorKind::PreconditionViolated, "matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) out.at(i, j) = rows[i][j];
  }
  return out;
}

std::vector<std::size_t> SplitPermutation::as_permutation() const {
  std::vector<std::size_t> pi(nu);
  pi.insert(pi.end(), mu.begin(), mu.end());
  return pi;
}

OrderReport OrderReport::from_count(TropicalScalar value, std::uint64_t count) {
  OrderReport r;
  r.resultant_value = std::move(value);
  r.maximizer_count = count;
  r.order_log2 = count ? std::log2(static_cast<double>(count)) : 0.0;
  r.is_power_of_two = count != 0 && (count & (count - 1)) == 0;
  if (r.is_power_of_two) r.k_if_integral = static_cast<unsigned>(std::countr_zero(count));
  return r;
}

TropicalMatrix build_sylvester(const TropicalPolynomial& a, const TropicalPolynomial& b) {
  const std::size_t m = a.degree();
  const std::size_t n = b.degree();
  if (m == 0 || n == 0) throw Error(ErrorKind::DegreeZero, "both degrees must be at least 1");
  TropicalMatrix out(n + m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) out.at(i, i + k) = a[k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) out.at(n + i, i + k) = b[k];
  return out;
}

namespace {

// Sum of selected cells; pi is 1-based and assumed valid.
TropicalScalar path_value(const TropicalMatrix& m, std::span<const std::size_t> pi) {
  Rational sum = 0;
  for (std::size_t row = 0; row < pi.size(); ++row) {
    const auto& cell = m.at(row, pi[row] - 1);
    if (cell.is_neg_inf()) return TropicalScalar::neg_inf();
    sum += cell.value();
  }
  return TropicalScalar(sum);
}

void require_permutation(const TropicalMatrix& m, std::span<const std::size_t> pi) {
  if (pi.size() != m.dim())
    throw Error(ErrorKind::PreconditionViolated, "permutation length differs from matrix size");
  std::vector<bool> seen(m.dim() + 1);
  for (auto x : pi) {
    if (x < 1 || x > m.dim() || seen[x])
      throw Error(ErrorKind::PreconditionViolated, "not a permutation of 1..n+m");
    seen[x] = true;
  }
}

constexpr std::size_t kBruteForceLimit = 9;

template <class Visitor>
void for_each_permutation(const TropicalMatrix& m, Visitor&& visit) {
  if (m.dim() > kBruteForceLimit)
    throw Error(ErrorKind::CapExceeded, "brute force is limited to dimension 9");
  std::vector<std::size_t> pi(m.dim());
  std::iota(pi.begin(), pi.end(), std::size_t{1});
  do {
    visit(path_value(m, pi));
  } while (std::next_permutation(pi.begin(), pi.end()));
}

}  // namespace

TropicalScalar perm_value(const TropicalMatrix& m, std::span<const std::size_t> pi) {
  require_permutation(m, pi);
  return path_value(m, pi);
}

TropicalScalar perm_value(const TropicalMatrix& m, const SplitPermutation& pi) {
  return perm_value(m, pi.as_permutation());
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Saturates instead of overflowing; callers only compare against budgets.
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > UINT64_MAX / num) return UINT64_MAX;
    r = r * num / i;
  }
  return r;
}

void check_split_budget(std::size_t n, std::size_t m, const EnumerationBudget& budget) {
  if (n + m > budget.max_order)
    throw Error(ErrorKind::CapExceeded,
                "n+m = " + std::to_string(n + m) + " exceeds " + std::to_string(budget.max_order));
  const auto count = binomial(n + m, n);
  if (count > budget.max_count)
    throw Error(ErrorKind::CapExceeded, "C(n+m, n) = " + std::to_string(count) +
                                            " exceeds budget " + std::to_string(budget.max_count));
}

std::vector<SplitPermutation> enumerate_s_star(std::size_t n, std::size_t m,
                                               const EnumerationBudget& budget) {
  if (n == 0 || m == 0) throw Error(ErrorKind::PreconditionViolated, "n and m must be at least 1");
  std::vector<SplitPermutation> out;
  out.reserve(binomial(n + m, n));
  for_each_split(n, m, budget, [&](const SplitPermutation& s) { out.push_back(s); });
  return out;
}

TropicalScalar permanent_brute(const TropicalMatrix& m) {
  TropicalScalar best;
  for_each_permutation(m, [&](const TropicalScalar& v) { best = trop_add(best, v); });
  return best;
}

std::uint64_t count_maximizers_brute(const TropicalMatrix& m) {
  const TropicalScalar best = permanent_brute(m);
  std::uint64_t count = 0;
  for_each_permutation(m, [&](const TropicalScalar& v) { count += (v == best); });
  return count;
}

TropicalScalar permanent_sstar(const TropicalMatrix& m, const EnumerationBudget& budget) {
  TropicalScalar best;
  for_each_split(m.a_rows(), m.b_rows(), budget, [&](const SplitPermutation& s) {
    best = trop_add(best, path_value(m, s.as_permutation()));
  });
  return best;
}

namespace {

struct SplitScan {
  TropicalScalar best;
  std::uint64_t count = 0;
  std::vector<SplitPermutation> argmax;
};

SplitScan scan_splits(const TropicalMatrix& m, const EnumerationBudget& budget, bool keep) {
  SplitScan scan;
  std::vector<std::size_t> pi;
  for_each_split(m.a_rows(), m.b_rows(), budget, [&](const SplitPermutation& s) {
    pi.assign(s.nu.begin(), s.nu.end());
    pi.insert(pi.end(), s.mu.begin(), s.mu.end());
    const TropicalScalar v = path_value(m, pi);
    if (v > scan.best) {
      scan.best = v;
      scan.count = 0;
      scan.argmax.clear();
    }
    if (v == scan.best) {
      ++scan.count;
      if (keep) scan.argmax.push_back(s);
    }
  });
  if (scan.best.is_neg_inf())
    throw Error(ErrorKind::TropicalZeroResultant, "every split permutation evaluates to -inf");
  return scan;
}

}  // namespace

OrderReport count_maximizers(const TropicalMatrix& m, const EnumerationBudget& budget) {
  SplitScan scan = scan_splits(m, budget, false);
  return OrderReport::from_count(std::move(scan.best), scan.count);
}

std::vector<SplitPermutation> maximizing_splits(const TropicalMatrix& m, const EnumerationBudget& budget) {
  return scan_splits(m, budget, true).argmax;
}

MergeMaximizers maximizers_by_merge(const TropicalPolynomial& a, const TropicalPolynomial& b) {
  if (!is_simple_nonzero(a) || !is_simple_nonzero(b))
    throw Error(ErrorKind::AssumptionViolated, "both polynomials need simple non-zero roots");
  const auto alpha = root_sequence(a);
  const auto beta = root_sequence(b);

  // gamma = pi(beta, alpha): beta_i lands at position nu_i, alpha_i at mu_i.
  MergeMaximizers out;
  SplitPermutation cur;
  auto merge = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    const std::size_t pos = i + j + 1;
    if (i == alpha.size() && j == beta.size()) {
      out.witnesses.push_back(cur);
      return;
    }
    const bool take_beta = j < beta.size() && (i == alpha.size() || beta[j] >= alpha[i]);
    const bool take_alpha = i < alpha.size() && (j == beta.size() || alpha[i] >= beta[j]);
    if (take_beta) {
      cur.nu.push_back(pos);
      self(self, i, j + 1);
      cur.nu.pop_back();
    }
    if (take_alpha) {
      cur.mu.push_back(pos);
      self(self, i + 1, j);
      cur.mu.pop_back();
    }
  };
  merge(merge, 0, 0);
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.count = out.witnesses.size();
  return out;
}

bool check_zigzag_lemma(const TropicalMatrix& m, std::span<const std::size_t> pi, std::size_t k) {
  require_permutation(m, pi);
  const std::size_t n = m.a_rows();
  if (k < 1 || k + 1 > pi.size())
    throw Error(ErrorKind::PreconditionViolated, "position out of range");
  const bool same_block = (k + 1 <= n) || (k > n);
  if (!same_block || pi[k - 1] < pi[k])
    throw Error(ErrorKind::PreconditionViolated, "no in-block descent at position " + std::to_string(k));
  const TropicalScalar before = path_value(m, pi);
  if (before.is_neg_inf()) throw Error(ErrorKind::PreconditionViolated, "M_pi is -inf");
  std::vector<std::size_t> swapped(pi.begin(), pi.end());
  std::swap(swapped[k - 1], swapped[k]);
  return path_value(m, swapped) > before;
}

TheoremVerdict verify_main_theorem(const TropicalPolynomial& a, const TropicalPolynomial& b,
                                   const EnumerationBudget& budget) {
  TheoremVerdict v;
  v.k = common_roots(a, b).size();
  v.theta = count_maximizers(build_sylvester(a, b), budget).maximizer_count;
  v.holds = v.k < 64 && v.theta == (std::uint64_t{1} << v.k);
  return v;
}

std::string to_string(const SplitPermutation& s) {
  std::ostringstream os;
  os << '(';
  const auto pi = s.as_permutation();
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) os << (i == s.nu.size() ? ", " : ",");
    os << pi[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const TropicalMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      cells.push_back(m.at(i, j).to_string());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i == m.a_rows() && i != 0) os << std::string((width + 1) * m.dim(), '-') << '\n';
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto& c = cells[i * m.dim() + j];
      os << std::string(width + 1 - c.size(), ' ') << c;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tropres
