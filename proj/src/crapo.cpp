#include "tutte/crapo.hpp"

#include <omp.h>

#include <atomic>
#include <functional>

#include "tutte/errors.hpp"

namespace tutte {

VectorConfig::VectorConfig(IntMatrix vectors, int dim) : v_(std::move(vectors)), dim_(dim) {
  for (const auto& v : v_)
    if (static_cast<int>(v.size()) != dim_) throw ConstraintError("vector length differs from the dimension");
  rank_ = v_.empty() ? 0 : tutte::rank_of(v_);
}

VectorConfig VectorConfig::of_ideal(const Ideal& ideal) { return of_complement(ideal.system(), ideal.members()); }

VectorConfig VectorConfig::of_complement(const RootSystem& sys, const RootSet& members) {
  IntMatrix rows;
  for (int i : members.complement().indices()) rows.push_back(sys.root(i).simple_coords);
  return VectorConfig(std::move(rows), sys.type().rank());
}

VectorConfig VectorConfig::permuted(const std::vector<int>& order) const {
  if (order.size() != v_.size()) throw ConstraintError("permutation length mismatch");
  std::vector<char> seen(v_.size(), 0);
  IntMatrix out;
  for (int k : order) {
    if (k < 0 || static_cast<std::size_t>(k) >= v_.size() || seen[static_cast<std::size_t>(k)])
      throw ConstraintError("not a permutation");
    seen[static_cast<std::size_t>(k)] = 1;
    out.push_back(v_[static_cast<std::size_t>(k)]);
  }
  return VectorConfig(std::move(out), dim_);
}

VectorConfig VectorConfig::deleted(int i) const {
  IntMatrix out = v_;
  out.erase(out.begin() + i);
  return VectorConfig(std::move(out), dim_);
}

VectorConfig VectorConfig::contracted(int i) const {
  const IntVector& e = v_.at(static_cast<std::size_t>(i));
  std::size_t k = 0;
  while (k < e.size() && e[k] == 0) ++k;
  if (k == e.size()) throw ConstraintError("cannot contract a loop");
  IntMatrix out;
  for (std::size_t j = 0; j < v_.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    IntVector w;
    for (std::size_t c = 0; c < e.size(); ++c)
      if (c != k) w.push_back(arith::mul_sub(e[k], v_[j][c], v_[j][k], e[c]));
    normalize_row(w);
    out.push_back(std::move(w));
  }
  return VectorConfig(std::move(out), dim_ - 1);
}

bool VectorConfig::is_loop(int i) const {
  for (auto x : v_.at(static_cast<std::size_t>(i)))
    if (x) return false;
  return true;
}

bool VectorConfig::is_coloop(int i) const { return deleted(i).rank() < rank_; }

int rank_of(const VectorConfig& cfg, const std::vector<int>& subset) {
  IntMatrix rows;
  for (int i : subset) rows.push_back(cfg.vectors().at(static_cast<std::size_t>(i)));
  return rows.empty() ? 0 : tutte::rank_of(rows);
}

namespace {

void check_basis_guard(const VectorConfig& cfg, std::uint64_t max_subsets) {
  const Integer c = binomial(static_cast<long>(cfg.size()), cfg.rank());
  if (c > Integer(static_cast<unsigned long>(max_subsets)))
    throw GuardError("basis enumeration over " + c.get_str() + " subsets exceeds the limit of " +
                     std::to_string(max_subsets));
}

// Vectors projected onto coordinates that are injective on their span.
IntMatrix project(const VectorConfig& cfg) {
  const auto piv = pivot_columns(cfg.vectors());
  IntMatrix out;
  for (const auto& v : cfg.vectors()) {
    IntVector w;
    for (int c : piv) w.push_back(v[static_cast<std::size_t>(c)]);
    out.push_back(std::move(w));
  }
  return out;
}

using Counts = std::vector<std::vector<std::uint64_t>>;

template <class T>
struct BasisSweep {
  const IntMatrix& y;
  int n;
  int r;

  // Fundamental-circuit pattern: nz[c * n + x] when basis element c has a
  // non-zero coefficient in x.
  void record(const std::vector<int>& basis, Counts& counts) const {
    const int w = r + n;
    std::vector<std::vector<T>> a(static_cast<std::size_t>(r), std::vector<T>(static_cast<std::size_t>(w)));
    for (int row = 0; row < r; ++row) {
      for (int c = 0; c < r; ++c)
        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
            arith::convert<T>(y[static_cast<std::size_t>(basis[static_cast<std::size_t>(c)])][static_cast<std::size_t>(row)]);
      for (int x = 0; x < n; ++x)
        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(r + x)] =
            arith::convert<T>(y[static_cast<std::size_t>(x)][static_cast<std::size_t>(row)]);
    }
    for (int c = 0; c < r; ++c) {
      int piv = c;
      while (arith::is_zero(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)])) ++piv;
      std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(c)]);
      const auto& pr = a[static_cast<std::size_t>(c)];
      for (int i = 0; i < r; ++i) {
        if (i == c) continue;
        auto& row = a[static_cast<std::size_t>(i)];
        if (arith::is_zero(row[static_cast<std::size_t>(c)])) continue;
        const T f = row[static_cast<std::size_t>(c)];
        const T g = pr[static_cast<std::size_t>(c)];
        for (int j = 0; j < w; ++j)
          row[static_cast<std::size_t>(j)] = arith::mul_sub(g, row[static_cast<std::size_t>(j)], f, pr[static_cast<std::size_t>(j)]);
        normalize_row(row);
      }
    }
    std::vector<char> in_basis(static_cast<std::size_t>(n), 0);
    for (int b : basis) in_basis[static_cast<std::size_t>(b)] = 1;
    int internal = 0, external = 0;
    for (int c = 0; c < r; ++c) {
      const int b = basis[static_cast<std::size_t>(c)];
      bool active = true;
      for (int x = 0; x < b && active; ++x)
        if (!in_basis[static_cast<std::size_t>(x)] && !arith::is_zero(a[static_cast<std::size_t>(c)][static_cast<std::size_t>(r + x)])) active = false;
      internal += active;
    }
    for (int x = 0; x < n; ++x) {
      if (in_basis[static_cast<std::size_t>(x)]) continue;
      bool active = true;
      for (int c = 0; c < r && active; ++c)
        if (!arith::is_zero(a[static_cast<std::size_t>(c)][static_cast<std::size_t>(r + x)]) && basis[static_cast<std::size_t>(c)] < x) active = false;
      external += active;
    }
    ++counts[static_cast<std::size_t>(internal)][static_cast<std::size_t>(external)];
  }

  template <class F>
  void dfs(int next, const Echelon<T>& ech, std::vector<int>& chosen, F&& on_basis) const {
    const int depth = static_cast<int>(chosen.size());
    if (depth == r) {
      on_basis(chosen);
      return;
    }
    for (int k = next; k <= n - (r - depth); ++k) {
      Echelon<T> e2 = ech;
      if (!e2.add(y[static_cast<std::size_t>(k)])) continue;
      chosen.push_back(k);
      dfs(k + 1, e2, chosen, on_basis);
      chosen.pop_back();
    }
  }
};

template <class T>
Counts crapo_counts(const IntMatrix& y, int n, int r) {
  Counts total(static_cast<std::size_t>(r) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n - r) + 1, 0));
  const BasisSweep<T> sweep{y, n, r};
  std::atomic<bool> overflow{false};
#pragma omp parallel
  {
    Counts local = total;
#pragma omp for schedule(dynamic)
    for (int first = 0; first <= n - r; ++first) {
      if (overflow.load()) continue;
      try {
        Echelon<T> e(r);
        if (!e.add(y[static_cast<std::size_t>(first)])) continue;
        std::vector<int> chosen{first};
        sweep.dfs(first + 1, e, chosen, [&](const std::vector<int>& b) { sweep.record(b, local); });
      } catch (const ArithmeticOverflow&) {
        overflow = true;
      }
    }
#pragma omp critical
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = 0; j < local[i].size(); ++j) total[i][j] += local[i][j];
  }
  if (overflow) throw ArithmeticOverflow();
  return total;
}

BivariatePolynomial from_counts(const Counts& c) {
  BivariatePolynomial t("x", "y");
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j)
      if (c[i][j]) t.add_term(static_cast<int>(i), static_cast<int>(j), Integer(static_cast<unsigned long>(c[i][j])));
  return t;
}

}  // namespace

std::vector<std::vector<int>> enumerate_bases(const VectorConfig& cfg, std::uint64_t max_subsets) {
  check_basis_guard(cfg, max_subsets);
  const int n = static_cast<int>(cfg.size()), r = cfg.rank();
  std::vector<std::vector<int>> out;
  if (r == 0) return {{}};
  const IntMatrix y = project(cfg);
  auto run = [&](auto tag) {
    using T = decltype(tag);
    out.clear();
    const BasisSweep<T> sweep{y, n, r};
    std::vector<int> chosen;
    sweep.dfs(0, Echelon<T>(r), chosen, [&](const std::vector<int>& b) { out.push_back(b); });
  };
  try {
    run(0LL);
  } catch (const ArithmeticOverflow&) {
    run(mpz_class(0));
  }
  return out;
}

BasisActivity activity(const VectorConfig& cfg, const std::vector<int>& basis) {
  const int r = cfg.rank();
  const int n = static_cast<int>(cfg.size());
  if (static_cast<int>(basis.size()) != r || rank_of(cfg, basis) != r) throw ConstraintError("not a basis");
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int b : basis) in[static_cast<std::size_t>(b)] = 1;
  BasisActivity act;
  for (int b : basis) {
    bool active = true;
    for (int x = 0; x < b && active; ++x) {
      if (in[static_cast<std::size_t>(x)]) continue;
      std::vector<int> s;
      for (int c : basis)
        if (c != b) s.push_back(c);
      s.push_back(x);
      if (rank_of(cfg, s) == r) active = false;
    }
    act.internal += active;
  }
  for (int x = 0; x < n; ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    std::vector<int> after;
    for (int b : basis)
      if (b > x) after.push_back(b);
    const int base = rank_of(cfg, after);
    after.push_back(x);
    act.external += rank_of(cfg, after) == base;
  }
  return act;
}

BivariatePolynomial tutte_crapo(const VectorConfig& cfg, std::uint64_t max_subsets) {
  check_basis_guard(cfg, max_subsets);
  const int n = static_cast<int>(cfg.size()), r = cfg.rank();
  if (r == 0) return BivariatePolynomial::monomial(1, 0, n);
  const IntMatrix y = project(cfg);
  try {
    return from_counts(crapo_counts<long long>(y, n, r));
  } catch (const ArithmeticOverflow&) {
    return from_counts(crapo_counts<mpz_class>(y, n, r));
  }
}

BivariatePolynomial tutte_crapo_serial(const VectorConfig& cfg, std::uint64_t max_subsets) {
  check_basis_guard(cfg, max_subsets);
  const int n = static_cast<int>(cfg.size()), r = cfg.rank();
  BivariatePolynomial t("x", "y");
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (rank_of(cfg, idx) == r) {
      const auto a = activity(cfg, idx);
      t.add_term(a.internal, a.external, 1);
    }
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return t;
}

namespace {

template <class T>
Counts corank_nullity_counts(const VectorConfig& cfg) {
  const int n = static_cast<int>(cfg.size()), r = cfg.rank();
  Counts c(static_cast<std::size_t>(r) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  std::function<void(int, const Echelon<T>&, int)> rec = [&](int k, const Echelon<T>& e, int size) {
    if (k == n) {
      ++c[static_cast<std::size_t>(r - e.rank())][static_cast<std::size_t>(size - e.rank())];
      return;
    }
    rec(k + 1, e, size);
    Echelon<T> e2 = e;
    if (e2.add(cfg[static_cast<std::size_t>(k)]))
      rec(k + 1, e2, size + 1);
    else
      rec(k + 1, e, size + 1);
  };
  rec(0, Echelon<T>(cfg.dim()), 0);
  return c;
}

}  // namespace

BivariatePolynomial tutte_corank_nullity(const VectorConfig& cfg, int max_elements) {
  if (static_cast<int>(cfg.size()) > max_elements)
    throw GuardError("corank-nullity sum over 2^" + std::to_string(cfg.size()) + " subsets exceeds the limit of 2^" +
                     std::to_string(max_elements));
  Counts c;
  try {
    c = corank_nullity_counts<long long>(cfg);
  } catch (const ArithmeticOverflow&) {
    c = corank_nullity_counts<mpz_class>(cfg);
  }
  BivariatePolynomial shifted("x", "y");
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c[a].size(); ++b)
      if (c[a][b]) shifted.add_term(static_cast<int>(a), static_cast<int>(b), Integer(static_cast<unsigned long>(c[a][b])));
  return shifted.shifted(-1, -1);
}

}  // namespace tutte
