#include "tutte/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>

#include "tutte/errors.hpp"

namespace tutte {

namespace {

struct Tester {
  // kind 0: x_i = x_j, 1: x_i = -x_j, 2: x_i = 0.
  int kind;
  int i;
  int j;
};

std::vector<Tester> testers(const std::vector<RootTuple>& hs, int n) {
  std::vector<Tester> out;
  for (const auto& h : hs) {
    if (h.i < 1 || h.i > n || std::abs(h.j) > n) throw ConstraintError("hyperplane " + format_tuple(h) + " out of range");
    if (h.j == 0)
      out.push_back({2, h.i - 1, 0});
    else if (h.j > 0)
      out.push_back({0, h.i - 1, h.j - 1});
    else
      out.push_back({1, h.i - 1, -h.j - 1});
  }
  return out;
}

inline int hits(const std::vector<Tester>& ts, const std::vector<long>& x, long p) {
  int h = 0;
  for (const auto& t : ts) {
    if (t.kind == 0)
      h += x[static_cast<std::size_t>(t.i)] == x[static_cast<std::size_t>(t.j)];
    else if (t.kind == 1)
      h += (x[static_cast<std::size_t>(t.i)] + x[static_cast<std::size_t>(t.j)]) % p == 0;
    else
      h += x[static_cast<std::size_t>(t.i)] == 0;
  }
  return h;
}

std::vector<Integer> widen(const std::vector<std::uint64_t>& c) {
  std::vector<Integer> out;
  for (auto v : c) out.emplace_back(static_cast<unsigned long>(v));
  return out;
}

}  // namespace

std::vector<Integer> point_profile_serial(const std::vector<RootTuple>& hyperplanes, int n, long p) {
  const auto ts = testers(hyperplanes, n);
  std::vector<std::uint64_t> counts(ts.size() + 1, 0);
  std::vector<long> x(static_cast<std::size_t>(n), 0);
  while (true) {
    ++counts[static_cast<std::size_t>(hits(ts, x, p))];
    int k = n - 1;
    while (k >= 0 && ++x[static_cast<std::size_t>(k)] == p) x[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
  }
  return widen(counts);
}

std::vector<Integer> point_profile_parallel(const std::vector<RootTuple>& hyperplanes, int n, long p) {
  const auto ts = testers(hyperplanes, n);
  const int lead = std::min(n, 2);
  long chunks = 1;
  for (int k = 0; k < lead; ++k) chunks *= p;
  std::vector<std::uint64_t> counts(ts.size() + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(ts.size() + 1, 0);
    std::vector<long> x(static_cast<std::size_t>(n), 0);
#pragma omp for schedule(dynamic)
    for (long c = 0; c < chunks; ++c) {
      long rest = c;
      for (int k = lead - 1; k >= 0; --k) {
        x[static_cast<std::size_t>(k)] = rest % p;
        rest /= p;
      }
      for (int k = lead; k < n; ++k) x[static_cast<std::size_t>(k)] = 0;
      while (true) {
        ++local[static_cast<std::size_t>(hits(ts, x, p))];
        int k = n - 1;
        while (k >= lead && ++x[static_cast<std::size_t>(k)] == p) x[static_cast<std::size_t>(k--)] = 0;
        if (k < lead) break;
      }
    }
#pragma omp critical
    for (std::size_t h = 0; h < local.size(); ++h) counts[h] += local[h];
  }
  return widen(counts);
}

int BlockModel::hyperplanes() const {
  long h = 0;
  const std::size_t k = sizes.size();
  for (std::size_t x = 0; x < k; ++x) {
    const long s = sizes[x];
    h += (within_plus[x] + within_minus[x]) * s * (s - 1) / 2 + zero[x] * s;
    for (std::size_t y = x + 1; y < k; ++y) h += (cross_plus[x][y] + cross_minus[x][y]) * s * sizes[y];
  }
  return static_cast<int>(h);
}

BlockModel block_model(const BlockPartition& bp) {
  BlockModel m;
  m.signed_residues = bp.family != Family::A;
  const std::size_t k = bp.blocks();
  for (std::size_t x = 0; x < k; ++x) m.sizes.push_back(static_cast<int>(bp.block(x).size()));
  m.within_plus.assign(k, 0);
  m.within_minus.assign(k, 0);
  m.zero = bp.zero;
  m.cross_plus.assign(k, std::vector<char>(k, 0));
  m.cross_minus.assign(k, std::vector<char>(k, 0));
  for (std::size_t x = 0; x < k; ++x) {
    m.within_plus[x] = bp.plus[x][x];
    m.within_minus[x] = bp.minus[x][x];
    for (std::size_t y = 0; y < k; ++y) {
      if (x == y) continue;
      m.cross_plus[x][y] = bp.plus[x][y];
      m.cross_minus[x][y] = bp.minus[x][y];
    }
  }
  return m;
}

namespace {

using Poly = std::vector<Integer>;  // coefficients in t
using Sparse = std::vector<std::pair<int, Integer>>;

struct Radix {
  std::vector<int> sizes;
  std::vector<long> stride;
  long total = 1;

  explicit Radix(const std::vector<int>& s) : sizes(s) {
    for (int x : s) {
      stride.push_back(total);
      total *= x + 1;
    }
  }
  std::vector<int> decode(long idx) const {
    std::vector<int> c(sizes.size());
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      c[k] = static_cast<int>(idx / stride[k] % (sizes[k] + 1));
    }
    return c;
  }
};

long choose2(long a) { return a * (a - 1) / 2; }

// Hyperplanes met by the d_X variables of each block sent to one non-zero residue.
long single_exponent(const BlockModel& m, const std::vector<int>& d) {
  long e = 0;
  for (std::size_t x = 0; x < d.size(); ++x) {
    e += m.within_plus[x] * choose2(d[x]);
    for (std::size_t y = x + 1; y < d.size(); ++y) e += m.cross_plus[x][y] * d[x] * d[y];
  }
  return e;
}

long zero_exponent(const BlockModel& m, const std::vector<int>& d) {
  long e = 0;
  for (std::size_t x = 0; x < d.size(); ++x) {
    e += (m.within_plus[x] + m.within_minus[x]) * choose2(d[x]) + m.zero[x] * d[x];
    for (std::size_t y = x + 1; y < d.size(); ++y) e += (m.cross_plus[x][y] + m.cross_minus[x][y]) * d[x] * d[y];
  }
  return e;
}

long pair_exponent(const BlockModel& m, const std::vector<int>& dp, const std::vector<int>& dm) {
  long e = single_exponent(m, dp) + single_exponent(m, dm);
  for (std::size_t x = 0; x < dp.size(); ++x) {
    e += m.within_minus[x] * dp[x] * dm[x];
    for (std::size_t y = x + 1; y < dp.size(); ++y) e += m.cross_minus[x][y] * (dp[x] * dm[y] + dm[x] * dp[y]);
  }
  return e;
}

// Multiplier of each choice vector d for one step of the recursion.
std::vector<Sparse> step_multipliers(const BlockModel& m, const Radix& rad, int kind) {
  std::vector<Sparse> out(static_cast<std::size_t>(rad.total));
  for (long idx = 0; idx < rad.total; ++idx) {
    const auto d = rad.decode(idx);
    Sparse s;
    if (kind == 0) {
      s.push_back({static_cast<int>(single_exponent(m, d)), Integer(1)});
    } else if (kind == 1) {
      s.push_back({static_cast<int>(zero_exponent(m, d)), Integer(1)});
    } else {
      // Split d between the residues q and -q.
      Radix sub(d);
      std::vector<Integer> acc;
      for (long j = 0; j < sub.total; ++j) {
        const auto dp = sub.decode(j);
        std::vector<int> dm(d.size());
        Integer w = 1;
        for (std::size_t x = 0; x < d.size(); ++x) {
          dm[x] = d[x] - dp[x];
          w *= binomial(d[x], dp[x]);
        }
        const auto e = static_cast<std::size_t>(pair_exponent(m, dp, dm));
        if (acc.size() <= e) acc.resize(e + 1);
        acc[e] += w;
      }
      for (std::size_t e = 0; e < acc.size(); ++e)
        if (sgn(acc[e]) != 0) s.push_back({static_cast<int>(e), acc[e]});
    }
    out[static_cast<std::size_t>(idx)] = std::move(s);
  }
  return out;
}

std::vector<Poly> apply_step(const Radix& rad, const std::vector<Poly>& cur, const std::vector<Sparse>& mult,
                             std::size_t width) {
  std::vector<Poly> next(static_cast<std::size_t>(rad.total), Poly(width));
#pragma omp parallel for schedule(dynamic)
  for (long target = 0; target < rad.total; ++target) {
    const auto t = rad.decode(target);
    Radix sub(t);
    Poly& out = next[static_cast<std::size_t>(target)];
    for (long j = 0; j < sub.total; ++j) {
      const auto d = sub.decode(j);
      long src = 0, didx = 0;
      Integer w = 1;
      for (std::size_t x = 0; x < t.size(); ++x) {
        const int c = t[x] - d[x];
        src += c * rad.stride[x];
        didx += d[x] * rad.stride[x];
        w *= binomial(rad.sizes[x] - c, d[x]);
      }
      const Poly& in = cur[static_cast<std::size_t>(src)];
      for (const auto& [e, c] : mult[static_cast<std::size_t>(didx)]) {
        const Integer f = w * c;
        for (std::size_t k = 0; k + static_cast<std::size_t>(e) < width; ++k)
          if (sgn(in[k]) != 0) out[k + static_cast<std::size_t>(e)] += f * in[k];
      }
    }
  }
  return next;
}

}  // namespace

std::vector<Integer> block_profile_parallel(const BlockModel& m, long p) {
  if (p < 3 || p % 2 == 0) throw ConstraintError("the prime must be odd");
  const Radix rad(m.sizes);
  const std::size_t width = static_cast<std::size_t>(m.hyperplanes()) + 1;
  std::vector<Poly> cur(static_cast<std::size_t>(rad.total), Poly(width));
  cur[0][0] = 1;
  if (!m.signed_residues) {
    const auto mult = step_multipliers(m, rad, 0);
    for (long q = 0; q < p; ++q) cur = apply_step(rad, cur, mult, width);
  } else {
    cur = apply_step(rad, cur, step_multipliers(m, rad, 1), width);
    const auto mult = step_multipliers(m, rad, 2);
    for (long q = 1; q <= (p - 1) / 2; ++q) cur = apply_step(rad, cur, mult, width);
  }
  return cur[static_cast<std::size_t>(rad.total - 1)];
}

namespace {

// Weak compositions of k into `parts` non-negative parts.
void for_each_composition(int k, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      a[static_cast<std::size_t>(idx)] = left;
      fn(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, left - v);
    }
  };
  if (parts == 0) {
    if (k == 0) fn(a);
    return;
  }
  rec(0, k);
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

std::vector<Integer> block_profile_reference(const BlockPartition& bp, long p) {
  if (p < 3 || p % 2 == 0) throw ConstraintError("the prime must be odd");
  const std::size_t ra = bp.a_blocks.size(), rb = bp.b_blocks.size();
  const bool signed_residues = bp.family != Family::A;
  const bool with_zero = bp.family == Family::B || bp.family == Family::C;
  const int parts = static_cast<int>(p);
  // a[u][q] and b[v][q]; residues 1..p for type A are stored at 0..p-1.
  std::vector<std::vector<int>> a(ra), b(rb);
  std::vector<Integer> out;

  auto exponent = [&]() -> long {
    long f = 0;
    if (!signed_residues) {
      for (std::size_t u = 0; u < ra; ++u)
        for (int s = 0; s < parts; ++s) {
          long inner = choose2(a[u][static_cast<std::size_t>(s)]);
          for (int v : bp.r[u]) inner += a[u][static_cast<std::size_t>(s)] * a[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
          f += inner;
        }
      return f;
    }
    auto A = [&](int l, long q) { return static_cast<long>(a[static_cast<std::size_t>(l)][static_cast<std::size_t>(q)]); };
    auto B = [&](int h, long q) { return static_cast<long>(b[static_cast<std::size_t>(h)][static_cast<std::size_t>(q)]); };
    for (std::size_t u = 0; u < ra; ++u)
      for (long q = 0; q < p; ++q) {
        f += choose2(A(static_cast<int>(u), q));
        for (int v : bp.r[u]) f += A(static_cast<int>(u), q) * A(v, q);
      }
    for (std::size_t v = 0; v < rb; ++v) {
      const int vi = static_cast<int>(v);
      long zero_inner = 0;
      for (int l : bp.r_a[v]) zero_inner += A(l, 0);
      for (int h : bp.s[v]) zero_inner += B(h, 0);
      // 2 b_0 ((b_0 - 1)/2 + ...), kept integral.
      f += B(vi, 0) * (B(vi, 0) - 1) + 2 * B(vi, 0) * zero_inner;
      for (long q = 1; q < p; ++q) {
        long inner = 0;
        for (int l : bp.r_a[v]) inner += A(l, q) + A(l, p - q);
        for (int h : bp.s[v]) inner += B(h, q) + B(h, p - q);
        f += choose2(B(vi, q)) + B(vi, q) * inner;
      }
      for (long q = 1; q <= (p - 1) / 2; ++q) f += B(vi, q) * B(vi, p - q);
    }
    if (with_zero) {
      for (int l : bp.r0) f += A(l, 0);
      for (int h : bp.s0) f += B(h, 0);
    }
    return f;
  };

  std::function<void(std::size_t, Integer)> rec = [&](std::size_t blk, Integer weight) {
    if (blk == ra + rb) {
      const auto e = static_cast<std::size_t>(exponent());
      if (out.size() <= e) out.resize(e + 1);
      out[e] += weight;
      return;
    }
    const bool is_a = blk < ra;
    const auto& block = is_a ? bp.a_blocks[blk] : bp.b_blocks[blk - ra];
    const int size = static_cast<int>(block.size());
    for_each_composition(size, parts, [&](const std::vector<int>& comp) {
      if (is_a)
        a[blk] = comp;
      else
        b[blk - ra] = comp;
      rec(blk + 1, weight * multinomial(size, comp));
    });
  };
  rec(0, Integer(1));
  return out;
}

}  // namespace tutte
