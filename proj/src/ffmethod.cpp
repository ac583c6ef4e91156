#include "tutte/ffmethod.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tutte/errors.hpp"
#include "tutte/kernels.hpp"
#include "tutte/linalg.hpp"

namespace tutte {

std::set<Integer> MinorProfile::absolute_values() const {
  std::set<Integer> out;
  for (const auto& m : minors) out.insert(abs(m));
  return out;
}

bool MinorProfile::excludes(long p) const {
  for (const auto& m : minors)
    if (sgn(m) != 0 && mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) return true;
  return false;
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

Integer ipow(long base, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

UnivariatePolynomial divide_profile(const std::vector<Integer>& counts, long p, int deficit) {
  const Integer d = ipow(p, deficit);
  std::vector<Integer> out;
  for (const auto& c : counts) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw InconsistencyError("point count not divisible by p^" + std::to_string(deficit));
    out.push_back(c / d);
  }
  return UnivariatePolynomial::from_integers(out, "t");
}

void check_points_guard(long p, int n, std::uint64_t max_points) {
  unsigned __int128 total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<unsigned long>(p);
    if (total > max_points)
      throw GuardError("brute-force count of " + std::to_string(p) + "^" + std::to_string(n) +
                       " points exceeds the limit of " + std::to_string(max_points));
  }
}

std::vector<long> choose_primes(int count, const FFOptions& opt) {
  if (opt.primes.empty()) return prime_plan(count);
  std::set<long> seen;
  for (long p : opt.primes) {
    if (p < 3 || !is_prime(p)) throw ConstraintError("requested prime " + std::to_string(p) + " is not an odd prime");
    if (!seen.insert(p).second) throw ConstraintError("requested primes must be distinct");
  }
  if (static_cast<int>(opt.primes.size()) < count)
    throw ConstraintError("need at least " + std::to_string(count) + " primes, got " +
                          std::to_string(opt.primes.size()));
  return {opt.primes.begin(), opt.primes.begin() + count};
}

// Compositions of m into positive parts.
void for_each_positive_composition(int m, const std::function<void(const std::vector<int>&)>& fn) {
  if (m == 0) {
    fn({});
    return;
  }
  for (unsigned long mask = 0; mask < (1UL << (m - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int g = 0; g < m - 1; ++g) {
      if (mask >> g & 1UL) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    fn(parts);
  }
}

Integer multinomial(int n, const std::vector<int>& parts) {
  Integer r = 1;
  int left = n;
  for (int a : parts) {
    r *= binomial(left, a);
    left -= a;
  }
  return r;
}

}  // namespace

MinorProfile minor_set(const IntMatrix& rows, int max_order, std::uint64_t max_minors) {
  const int n = static_cast<int>(rows.size());
  const int d = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != d) throw ConstraintError("ragged matrix");
  if (max_order < 0) max_order = std::min(n, d);
  if (max_order > std::min(n, d)) throw ConstraintError("minor order exceeds the matrix size");
  Integer work = 0;
  for (int k = 1; k <= max_order; ++k) work += binomial(n, k) * binomial(d, k);
  if (work > Integer(static_cast<unsigned long>(max_minors)))
    throw GuardError("minor enumeration of " + work.get_str() + " minors exceeds the limit of " +
                     std::to_string(max_minors));
  MinorProfile prof;
  prof.max_order = max_order;
  prof.vectors = rows.size();
  for (int k = 1; k <= max_order; ++k)
    for_each_subset(n, k, [&](const std::vector<int>& ri) {
      for_each_subset(d, k, [&](const std::vector<int>& ci) {
        IntMatrix sq(static_cast<std::size_t>(k), IntVector(static_cast<std::size_t>(k)));
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            sq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                rows[static_cast<std::size_t>(ri[static_cast<std::size_t>(a)])][static_cast<std::size_t>(ci[static_cast<std::size_t>(b)])];
        const Integer d = determinant(sq);
        prof.minors.insert(d);
        prof.minors.insert(-d);
      });
    });
  return prof;
}

MinorProfile minor_set(const RootSystemType& type, int max_order, std::uint64_t max_minors) {
  IntMatrix rows;
  for (const auto& r : positive_roots(type)) {
    IntVector v;
    for (auto x : r.ambient2) {
      if (x % 2) throw UnsupportedError("minor sets need integral ambient coordinates; " + type.name() + " has none");
      v.push_back(x / 2);
    }
    rows.push_back(v);
  }
  return minor_set(rows, max_order, max_minors);
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<long> prime_plan(int count, const MinorProfile* minors) {
  std::vector<long> out;
  for (long p = 3; static_cast<int>(out.size()) < count; p += 2) {
    if (!is_prime(p)) continue;
    if (minors && minors->excludes(p)) continue;
    out.push_back(p);
  }
  return out;
}

TProfile count_points(const std::vector<RootTuple>& hyperplanes, int n, long p, std::uint64_t max_points) {
  check_points_guard(p, n, max_points);
  return {p, n, point_profile_parallel(hyperplanes, n, p)};
}

TProfile count_points_serial(const std::vector<RootTuple>& hyperplanes, int n, long p, std::uint64_t max_points) {
  check_points_guard(p, n, max_points);
  return {p, n, point_profile_serial(hyperplanes, n, p)};
}

UnivariatePolynomial coboundary_ideal_at_prime(const BlockPartition& bp, long p) {
  return divide_profile(block_profile_parallel(block_model(bp), p), p, bp.family == Family::A ? 1 : 0);
}

UnivariatePolynomial coboundary_full_at_prime(Family family, int n, long p) {
  if (p < 3 || !is_prime(p)) throw ConstraintError("the prime must be odd");
  std::vector<Integer> acc;
  auto add = [&](long e, const Integer& c) {
    if (acc.size() <= static_cast<std::size_t>(e)) acc.resize(static_cast<std::size_t>(e) + 1);
    acc[static_cast<std::size_t>(e)] += c;
  };
  switch (family) {
    case Family::A:
      for_each_positive_composition(n, [&](const std::vector<int>& a) {
        long e = 0;
        for (int x : a) e += static_cast<long>(x) * (x - 1) / 2;
        add(e, binomial(p, static_cast<long>(a.size())) * multinomial(n, a));
      });
      return divide_profile(acc, p, 1);
    case Family::B:
    case Family::C:
    case Family::D: {
      const long half = (p - 1) / 2;
      for (int a = 0; a <= n; ++a) {
        const long zero = family == Family::D ? static_cast<long>(a) * (a - 1) : static_cast<long>(a) * a;
        for_each_positive_composition(n - a, [&](const std::vector<int>& b) {
          long e = zero;
          for (int x : b) e += static_cast<long>(x) * (x - 1) / 2;
          add(e, binomial(n, a) * binomial(half, static_cast<long>(b.size())) * multinomial(n - a, b) *
                     ipow(2, n - a));
        });
      }
      return divide_profile(acc, p, 0);
    }
    default:
      throw UnsupportedError("closed forms exist for classical types only");
  }
}

CoboundaryResult coboundary_full(Family family, int n, const FFOptions& opt) {
  CoboundaryResult res;
  if (family == Family::C) {
    family = Family::B;
    res.note = "type C has the same hyperplanes as type B";
  }
  res.rank = family == Family::A ? n - 1 : n;
  res.primes = choose_primes(res.rank + 1, opt);
  std::vector<std::pair<Integer, UnivariatePolynomial>> pts;
  for (long p : res.primes) pts.emplace_back(Integer(p), coboundary_full_at_prime(family, n, p));
  res.polynomial = lagrange_interpolate(pts);
  std::vector<int> vars;
  for (int v = 1; v <= n; ++v) vars.push_back(v);
  res.components.push_back({family, vars, res.rank, "full", res.primes});
  return res;
}

CoboundaryResult coboundary_polynomial(const Ideal& ideal, const FFOptions& opt) {
  const RootSystemType& type = ideal.system().type();
  if (!type.is_classical())
    throw UnsupportedError("the finite field method handles classical types only, got " + type.name());
  if (ideal.size() == 0 && type.family() != Family::C) return coboundary_full(type.family(), type.family_parameter(), opt);
  if (ideal.size() == 0) return coboundary_full(Family::C, type.family_parameter(), opt);

  CoboundaryResult res;
  res.polynomial = BivariatePolynomial::constant(1, "q", "t");
  const auto whole = complement_of(ideal);
  std::set<long> used;
  for (const auto& comp : decompose_components(whole)) {
    const BlockPartition bp = partition_in_accordance(comp);
    const auto hs = comp.hyperplanes();
    if (model_hyperplanes(bp) != std::set<RootTuple>(hs.begin(), hs.end()))
      throw InconsistencyError("block partition " + format_partition(bp) + " does not reproduce its component");
    IntMatrix normals;
    for (int i : comp.roots.indices()) normals.push_back(comp.system->root(i).ambient2);
    const int rank = rank_of(normals);
    const int deficit = comp.m() - rank;
    const auto primes = choose_primes(rank + 1, opt);
    const BlockModel model = block_model(bp);
    std::vector<std::pair<Integer, UnivariatePolynomial>> pts;
    for (long p : primes) pts.emplace_back(Integer(p), divide_profile(block_profile_parallel(model, p), p, deficit));
    res.polynomial = res.polynomial * lagrange_interpolate(pts);
    res.rank += rank;
    used.insert(primes.begin(), primes.end());
    res.components.push_back({comp.family(), comp.variables, rank, format_partition(bp), primes});
  }
  res.primes.assign(used.begin(), used.end());
  return res;
}

CoboundaryResult coboundary_bruteforce(const Ideal& ideal, std::uint64_t max_points) {
  const RootSystemType& type = ideal.system().type();
  if (!type.is_classical()) throw UnsupportedError("brute-force counting handles classical types only");
  const Arrangement arr = arrangement_of(ideal);
  const int n = type.family_parameter();
  CoboundaryResult res;
  res.rank = arr.normals.empty() ? 0 : rank_of(arr.normals);
  res.primes = prime_plan(res.rank + 1);
  std::vector<std::pair<Integer, UnivariatePolynomial>> pts;
  for (long p : res.primes) {
    const TProfile prof = count_points(arr.tuples, n, p, max_points);
    pts.emplace_back(Integer(p), divide_profile(prof.counts, p, n - res.rank));
  }
  res.polynomial = lagrange_interpolate(pts);
  return res;
}

}  // namespace tutte
