#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace tutte {

using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;

// Thrown by the checked 64-bit kernels; callers retry with big integers.
class ArithmeticOverflow : public std::overflow_error {
 public:
  ArithmeticOverflow() : std::overflow_error("64-bit overflow in elimination") {}
};

namespace arith {

inline long long mul_sub(long long a, long long b, long long c, long long d) {
  __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
  if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow();
  return static_cast<long long>(v);
}
inline mpz_class mul_sub(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                         const mpz_class& d) {
  return a * b - c * d;
}

inline long long gcd(long long a, long long b) { return std::gcd(a, b); }
inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

template <class T, class S>
T convert(const S& s) {
  if constexpr (std::is_same_v<T, mpz_class> && std::is_same_v<S, long long>)
    return mpz_class(static_cast<long>(s));
  else
    return T(s);
}

inline bool is_zero(long long a) { return a == 0; }
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }

}  // namespace arith

// Divides a row by the gcd of its entries.
template <class T>
void normalize_row(std::vector<T>& row) {
  T g = 0;
  for (const auto& v : row) {
    if (!arith::is_zero(v)) g = arith::gcd(g, v);
  }
  if (g < 0) g = -g;
  if (g > 1)
    for (auto& v : row) v /= g;
}

// Row echelon form grown one vector at a time.
template <class T>
class Echelon {
 public:
  explicit Echelon(int dim) : dim_(dim) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces v against the stored rows; true when v is independent.
  template <class V>
  bool reduce(const V& v, std::vector<T>& out) const {
    out.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = arith::convert<T>(v[i]);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int pc = pivots_[k];
      if (arith::is_zero(out[pc])) continue;
      const T a = rows_[k][pc];
      const T b = out[pc];
      for (int c = 0; c < dim_; ++c) out[c] = arith::mul_sub(a, out[c], b, rows_[k][c]);
      normalize_row(out);
    }
    for (int c = 0; c < dim_; ++c)
      if (!arith::is_zero(out[c])) return true;
    return false;
  }

  template <class V>
  bool add(const V& v) {
    std::vector<T> r;
    if (!reduce(v, r)) return false;
    int pc = 0;
    while (arith::is_zero(r[pc])) ++pc;
    rows_.push_back(std::move(r));
    pivots_.push_back(pc);
    return true;
  }

 private:
  int dim_;
  std::vector<std::vector<T>> rows_;
  std::vector<int> pivots_;
};

// Exact rank by fraction-free elimination over big integers.
int rank_of(const IntMatrix& rows);
int rank_of(const std::vector<std::vector<mpz_class>>& rows);
mpz_class determinant(const IntMatrix& square);

// Pivot columns of an echelon form of the rows; projecting onto them is
// injective on the row space.
std::vector<int> pivot_columns(const IntMatrix& rows);

}  // namespace tutte
