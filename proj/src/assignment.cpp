#include <optional>
#include <vector>

#include "tropres/sylvester.hpp"

namespace tropres {

namespace {

// Extended-rational cost where nullopt is +infinity.
using Cost = std::optional<Rational>;

bool less(const Cost& x, const Cost& y) {
  if (!x) return false;
  if (!y) return true;
  return *x < *y;
}

}  // namespace

// Hungarian method (shortest augmenting paths with potentials) minimizing the
// negated weights. Cells equal to -inf are forbidden edges; if an augmenting
// search from some row reaches no free column, Hall's condition fails and no
// finite permutation exists.
TropicalScalar permanent_assignment(const TropicalMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return TropicalScalar::one();

  std::vector<Rational> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::vector<Cost> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = row_of[j0];
      Cost delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const auto& cell = m.at(i0 - 1, j - 1);
        if (cell.is_finite()) {
          Rational cur = -cell.value() - u[i0] - v[j];
          if (less(cur, minv[j])) {
            minv[j] = std::move(cur);
            way[j] = j0;
          }
        }
        if (less(minv[j], delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (!delta) return TropicalScalar::neg_inf();
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Rational total = 0;
  for (std::size_t j = 1; j <= n; ++j) total += m.at(row_of[j] - 1, j - 1).value();
  return TropicalScalar(total);
}

}  // namespace tropres
