#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropres/polynomial.hpp"
#include "tropres/scalar.hpp"

namespace tropres {

/// Square matrix over the max-plus semifield, row-major. `a_rows` records how
/// many leading rows belong to the first polynomial when the matrix is a
/// Sylvester matrix; the remaining rows belong to the second one.
class TropicalMatrix {
 public:
  TropicalMatrix() = default;
  TropicalMatrix(std::size_t dim, std::size_t a_rows);
  /// General square matrix from rows; a_rows defaults to the full dimension.
  static TropicalMatrix from_rows(const std::vector<std::vector<TropicalScalar>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t a_rows() const noexcept { return a_rows_; }
  std::size_t b_rows() const noexcept { return dim_ - a_rows_; }

  const TropicalScalar& at(std::size_t row, std::size_t col) const { return cells_[row * dim_ + col]; }
  TropicalScalar& at(std::size_t row, std::size_t col) { return cells_[row * dim_ + col]; }

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t a_rows_ = 0;
  std::vector<TropicalScalar> cells_;
};

/// Element of S*: the first n entries (nu) and the last m entries (mu) of a
/// permutation of 1..n+m, each block strictly increasing. 1-based.
struct SplitPermutation {
  std::vector<std::size_t> nu;
  std::vector<std::size_t> mu;

  std::vector<std::size_t> as_permutation() const;
  friend auto operator<=>(const SplitPermutation&, const SplitPermutation&) = default;
};

struct EnumerationBudget {
  std::uint64_t max_count = 10'000'000;
  std::size_t max_order = 20;
};

struct OrderReport {
  TropicalScalar resultant_value;
  std::uint64_t maximizer_count = 0;
  double order_log2 = 0.0;  // display only; compare counts
  bool is_power_of_two = false;
  std::optional<unsigned> k_if_integral;

  static OrderReport from_count(TropicalScalar value, std::uint64_t count);
};

struct TheoremVerdict {
  std::size_t k = 0;
  std::uint64_t theta = 0;
  bool holds = false;
};

struct MergeMaximizers {
  std::uint64_t count = 0;
  std::vector<SplitPermutation> witnesses;  // sorted
};

/// Rows 0..n-1 carry a shifted right by the row index, rows n..n+m-1 carry b,
/// where m = deg a and n = deg b. Out-of-band cells are -inf.
/// Throws Error(DegreeZero) if either degree is 0.
TropicalMatrix build_sylvester(const TropicalPolynomial& a, const TropicalPolynomial& b);

/// Tropical product of M[i][pi_i - 1]. Throws Error(PreconditionViolated) if
/// pi is not a permutation of 1..dim.
TropicalScalar perm_value(const TropicalMatrix& m, std::span<const std::size_t> pi);
TropicalScalar perm_value(const TropicalMatrix& m, const SplitPermutation& pi);

std::uint64_t binomial(std::size_t n, std::size_t k);

/// Visits every split permutation with |nu| = n, |mu| = m, lexicographic by nu.
/// Throws Error(CapExceeded) when n + m or C(n+m, n) exceed the budget.
template <class Visitor>
void for_each_split(std::size_t n, std::size_t m, const EnumerationBudget& budget, Visitor&& visit);

/// Materialized form of for_each_split; requires n, m >= 1.
std::vector<SplitPermutation> enumerate_s_star(std::size_t n, std::size_t m,
                                               const EnumerationBudget& budget = {});

/// Max over all (n+m)! permutations. Oracle only; dim <= 9.
TropicalScalar permanent_brute(const TropicalMatrix& m);
/// Number of permutations in S attaining permanent_brute. Oracle only; dim <= 9.
std::uint64_t count_maximizers_brute(const TropicalMatrix& m);

TropicalScalar permanent_sstar(const TropicalMatrix& m, const EnumerationBudget& budget = {});

/// Max-weight perfect assignment (Hungarian method with exact potentials).
/// -inf iff every permutation hits a -inf cell.
TropicalScalar permanent_assignment(const TropicalMatrix& m);

/// Counts maximizing split permutations. Throws Error(TropicalZeroResultant)
/// if the max over S* is -inf.
OrderReport count_maximizers(const TropicalMatrix& m, const EnumerationBudget& budget = {});
std::vector<SplitPermutation> maximizing_splits(const TropicalMatrix& m,
                                                const EnumerationBudget& budget = {});

/// Builds every maximizer directly by merging the descending root lists of b
/// and a, branching at each tie. Requires simple non-zero roots.
MergeMaximizers maximizers_by_merge(const TropicalPolynomial& a, const TropicalPolynomial& b);

/// Swaps positions k and k+1 (1-based) of a permutation that has a descent
/// there inside one block and reports whether the value strictly increased.
/// Throws Error(PreconditionViolated) when M_pi is -inf or there is no such
/// in-block descent.
bool check_zigzag_lemma(const TropicalMatrix& m, std::span<const std::size_t> pi, std::size_t k);

/// theta = 2^k check. Throws Error(AssumptionViolated) outside the simple
/// non-zero root setting.
TheoremVerdict verify_main_theorem(const TropicalPolynomial& a, const TropicalPolynomial& b,
                                   const EnumerationBudget& budget = {});

std::string to_string(const SplitPermutation& s);
std::string to_string(const TropicalMatrix& m);

// ---------------------------------------------------------------------------

void check_split_budget(std::size_t n, std::size_t m, const EnumerationBudget& budget);

template <class Visitor>
void for_each_split(std::size_t n, std::size_t m, const EnumerationBudget& budget, Visitor&& visit) {
  check_split_budget(n, m, budget);
  const std::size_t total = n + m;
  SplitPermutation s;
  s.nu.resize(n);
  s.mu.resize(m);
  for (std::size_t i = 0; i < n; ++i) s.nu[i] = i + 1;
  std::vector<bool> in_nu(total + 1);
  for (;;) {
    std::fill(in_nu.begin(), in_nu.end(), false);
    for (auto x : s.nu) in_nu[x] = true;
    for (std::size_t v = 1, j = 0; v <= total; ++v)
      if (!in_nu[v]) s.mu[j++] = v;
    visit(static_cast<const SplitPermutation&>(s));

    // next n-combination of 1..total in lexicographic order
    std::size_t i = n;
    while (i > 0 && s.nu[i - 1] == total - n + i) --i;
    if (i == 0) return;
    ++s.nu[i - 1];
    for (std::size_t j = i; j < n; ++j) s.nu[j] = s.nu[j - 1] + 1;
  }
}

}  // namespace tropres
