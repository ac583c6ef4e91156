#include "tutte/linalg.hpp"

#include "tutte/errors.hpp"

namespace tutte {

namespace {

int bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<std::vector<mpz_class>> widen(const IntMatrix& rows) {
  std::vector<std::vector<mpz_class>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<mpz_class> w;
    w.reserve(row.size());
    for (auto v : row) w.emplace_back(static_cast<long>(v));
    a.push_back(std::move(w));
  }
  return a;
}

}  // namespace

int rank_of(const IntMatrix& rows) { return bareiss_rank(widen(rows)); }

int rank_of(const std::vector<std::vector<mpz_class>>& rows) { return bareiss_rank(rows); }

mpz_class determinant(const IntMatrix& square) {
  const std::size_t n = square.size();
  for (const auto& row : square)
    if (row.size() != n) throw ConstraintError("determinant of a non-square matrix");
  if (n == 0) return 1;
  auto a = widen(square);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a[piv][k]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<int> pivot_columns(const IntMatrix& rows) {
  if (rows.empty()) return {};
  Echelon<mpz_class> e(static_cast<int>(rows[0].size()));
  for (const auto& r : rows) e.add(r);
  return e.pivots();
}

}  // namespace tutte
