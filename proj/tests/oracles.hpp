#pragma once

// Reference computations written without the library's algorithms. They are
// slow and only meant for small inputs.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tutte/exactpoly.hpp"
#include "tutte/rootsystems.hpp"

namespace tutte::oracle {

using Vec = std::vector<long long>;

// Rank over Q by plain Gaussian elimination on rationals.
inline int rank_q(const std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<mpq_class>> m;
  for (const auto& r : rows) {
    std::vector<mpq_class> q;
    for (long long x : r) q.emplace_back(static_cast<long>(x));
    m.push_back(std::move(q));
  }
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Determinant by cofactor expansion.
inline mpz_class det_leibniz(const std::vector<Vec>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return static_cast<long>(a[0][0]);
  mpz_class d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<Vec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const mpz_class term = mpz_class(static_cast<long>(a[0][c])) * det_leibniz(minor);
    d += (c % 2 ? -term : term);
  }
  return d;
}

// Tutte polynomial as the corank-nullity sum over all subsets.
inline BivariatePolynomial tutte(const std::vector<Vec>& vectors) {
  const std::size_t n = vectors.size();
  const int r = rank_q(vectors);
  std::map<std::pair<int, int>, long long> counts;  // (corank, nullity) -> #subsets
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vec> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(vectors[i]);
    const int rs = rank_q(sub);
    ++counts[{r - rs, static_cast<int>(sub.size()) - rs}];
  }
  BivariatePolynomial t("x", "y");
  for (const auto& [key, c] : counts) {
    const auto [a, b] = key;
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) {
        mpz_class coef = binomial(a, i) * binomial(b, j) * static_cast<long>(c);
        if ((a - i + b - j) % 2) coef = -coef;
        t.add_term(i, j, coef);
      }
  }
  return t;
}

// Number of bases: subsets of size r and rank r.
inline long long basis_count(const std::vector<Vec>& vectors) {
  const std::size_t n = vectors.size();
  const int r = rank_q(vectors);
  long long count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != r) continue;
    std::vector<Vec> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(vectors[i]);
    if (rank_q(sub) == r) ++count;
  }
  return count;
}

inline bool dominated(const Vec& u, const Vec& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

// Ideals by testing every subset for upward closure.
inline std::uint64_t ideals_by_subsets(const std::vector<Vec>& roots) {
  const std::size_t n = roots.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (std::size_t u = 0; u < n && closed; ++u) {
      if (!(mask >> u & 1)) continue;
      for (std::size_t v = 0; v < n; ++v)
        if (!(mask >> v & 1) && dominated(roots[u], roots[v])) {
          closed = false;
          break;
        }
    }
    count += closed;
  }
  return count;
}

// Ideals through their antichains of minimal elements.
inline std::uint64_t ideals_by_antichains(const std::vector<Vec>& roots) {
  const std::size_t n = roots.size();
  std::vector<std::uint64_t> comparable(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (dominated(roots[u], roots[v]) || dominated(roots[v], roots[u])) comparable[u] |= std::uint64_t{1} << v;
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  auto count = [&](auto&& self, std::uint64_t avail) -> std::uint64_t {
    if (avail == 0) return 1;
    if (auto it = memo.find(avail); it != memo.end()) return it->second;
    const int x = __builtin_ctzll(avail);
    const std::uint64_t rest = avail & ~(std::uint64_t{1} << x);
    const std::uint64_t total = self(self, rest) + self(self, rest & ~comparable[static_cast<std::size_t>(x)]);
    memo[avail] = total;
    return total;
  };
  return count(count, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

// sum over F_p^n of t^(number of hyperplanes through the point).
inline std::vector<mpz_class> point_profile(const std::vector<RootTuple>& hs, int n, long p) {
  std::vector<mpz_class> prof(hs.size() + 1, 0);
  std::vector<long> x(static_cast<std::size_t>(n), 0);
  while (true) {
    std::size_t h = 0;
    for (const auto& t : hs) {
      const long a = x[static_cast<std::size_t>(t.i - 1)];
      long b = 0;
      if (t.j > 0) b = x[static_cast<std::size_t>(t.j - 1)];
      if (t.j < 0) b = (p - x[static_cast<std::size_t>(-t.j - 1)]) % p;
      if (a == b) ++h;
    }
    ++prof[h];
    int k = 0;
    while (k < n && ++x[static_cast<std::size_t>(k)] == p) x[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
  }
  return prof;
}

}  // namespace tutte::oracle
