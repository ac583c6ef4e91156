#include "tutte/rootsystems.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "tutte/errors.hpp"

namespace tutte {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
  }
  return "?";
}

RootSystemType RootSystemType::make(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw ConstraintError("type A requires rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) throw ConstraintError("types B and C require rank >= 2");
      break;
    case Family::D:
      if (rank < 4) throw ConstraintError("type D requires rank >= 4");
      break;
    case Family::G2:
      if (rank != 2) throw ConstraintError("G2 has rank 2");
      break;
    case Family::F4:
      if (rank != 4) throw ConstraintError("F4 has rank 4");
      break;
    case Family::E6:
      if (rank != 6) throw ConstraintError("E6 has rank 6");
      break;
  }
  return RootSystemType(family, rank);
}

RootSystemType RootSystemType::unchecked(Family family, int rank) {
  if (rank < 0) throw ConstraintError("negative rank");
  return RootSystemType(family, rank);
}

RootSystemType RootSystemType::parse(std::string_view name, std::optional<int> rank) {
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "E7" || s == "E8") throw UnsupportedError("type " + s + " is not supported");
  if (s == "G2") return make(Family::G2, rank.value_or(2));
  if (s == "F4") return make(Family::F4, rank.value_or(4));
  if (s == "E6") return make(Family::E6, rank.value_or(6));
  if (s.empty() || s.find_first_not_of("ABCD") == 0)
    throw ConstraintError("unknown root system type '" + std::string(name) + "'");
  Family f = s[0] == 'A' ? Family::A : s[0] == 'B' ? Family::B : s[0] == 'C' ? Family::C : Family::D;
  std::optional<int> r = rank;
  if (s.size() > 1) {
    const std::string digits = s.substr(1);
    if (digits.find_first_not_of("0123456789") != std::string::npos)
      throw ConstraintError("unknown root system type '" + std::string(name) + "'");
    const int embedded = std::stoi(digits);
    if (r && *r != embedded) throw ConstraintError("rank does not match type name " + s);
    r = embedded;
  }
  if (!r) throw ConstraintError("type " + s + " requires a rank");
  return make(f, *r);
}

int RootSystemType::coordinate_dim() const {
  switch (family_) {
    case Family::A: return rank_ + 1;
    case Family::G2: return 3;
    case Family::F4: return 4;
    case Family::E6: return 8;
    default: return rank_;
  }
}

int RootSystemType::space_dim() const { return family_ == Family::A ? rank_ + 1 : rank_; }

bool RootSystemType::is_classical() const {
  return family_ == Family::A || family_ == Family::B || family_ == Family::C || family_ == Family::D;
}

std::string RootSystemType::name() const {
  if (is_classical()) return family_name(family_) + std::to_string(rank_);
  return family_name(family_);
}

std::string format_tuple(const RootTuple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

int Root::height() const {
  long long h = 0;
  for (auto c : simple_coords) h += c;
  return static_cast<int>(h);
}

std::string format_coords(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string linear_order_key(const Root& u) {
  std::string w;
  for (std::size_t i = 0; i < u.simple_coords.size(); ++i)
    w.append(static_cast<std::size_t>(u.simple_coords[i]), static_cast<char>('1' + i));
  return w;
}

bool key_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool root_leq(const Root& u, const Root& v) {
  if (u.simple_coords.size() != v.simple_coords.size())
    throw ConstraintError("roots from different systems");
  for (std::size_t i = 0; i < u.simple_coords.size(); ++i)
    if (u.simple_coords[i] > v.simple_coords[i]) return false;
  return true;
}

namespace {

IntVector unit(int dim, int i, long long scale) {
  IntVector v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = scale;
  return v;
}

IntVector add(IntVector a, const IntVector& b, long long s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

IntMatrix simple_system(Family f, int n) {
  IntMatrix s;
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D: {
      for (int i = 0; i + 1 < n; ++i) s.push_back(add(unit(n, i, 2), unit(n, i + 1, 2), -1));
      if (f == Family::B && n >= 1) s.push_back(unit(n, n - 1, 2));
      if (f == Family::C && n >= 1) s.push_back(unit(n, n - 1, 4));
      if (f == Family::D && n >= 2) s.push_back(add(unit(n, n - 2, 2), unit(n, n - 1, 2)));
      break;
    }
    case Family::G2:
      s = {{2, -2, 0}, {-4, 2, 2}};
      break;
    case Family::F4:
      s = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    case Family::E6:
      s = {{1, -1, -1, -1, -1, -1, -1, 1},
           {2, 2, 0, 0, 0, 0, 0, 0},
           {-2, 2, 0, 0, 0, 0, 0, 0},
           {0, -2, 2, 0, 0, 0, 0, 0},
           {0, 0, -2, 2, 0, 0, 0, 0},
           {0, 0, 0, -2, 2, 0, 0, 0}};
      break;
  }
  return s;
}

// Labelled classical roots (doubled coordinates).
std::vector<std::pair<RootTuple, IntVector>> classical_roots(Family f, int n) {
  std::vector<std::pair<RootTuple, IntVector>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({{i, j}, add(unit(n, i - 1, 2), unit(n, j - 1, 2), -1)});
      if (f != Family::A) out.push_back({{i, -j}, add(unit(n, i - 1, 2), unit(n, j - 1, 2))});
    }
    if (f == Family::B) out.push_back({{i, 0}, unit(n, i - 1, 2)});
    if (f == Family::C) out.push_back({{i, 0}, unit(n, i - 1, 4)});
  }
  return out;
}

// Every root of an exceptional system (doubled coordinates), both signs.
std::vector<IntVector> exceptional_roots(Family f) {
  std::vector<IntVector> out;
  if (f == Family::G2) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        out.push_back(add(unit(3, i, 2), unit(3, j, 2), -1));
        const int k = 3 - i - j;
        IntVector v = unit(3, i, 4);
        v = add(add(v, unit(3, j, 2), -1), unit(3, k, 2), -1);
        out.push_back(v);
        out.push_back(add(IntVector(3, 0), v, -1));
      }
  } else if (f == Family::F4) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j)
        for (int si : {-1, 1})
          for (int sj : {-1, 1}) out.push_back(add(unit(4, i, 2 * si), unit(4, j, 2 * sj)));
      out.push_back(unit(4, i, 2));
      out.push_back(unit(4, i, -2));
    }
    for (int mask = 0; mask < 16; ++mask) {
      IntVector v(4);
      for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
      out.push_back(v);
    }
  } else if (f == Family::E6) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int si : {-1, 1})
          for (int sj : {-1, 1}) out.push_back(add(unit(8, i, 2 * si), unit(8, j, 2 * sj)));
    for (int mask = 0; mask < 32; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0) continue;
      IntVector v{0, 0, 0, 0, 0, -1, -1, 1};
      for (int i = 0; i < 5; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
      out.push_back(v);
      out.push_back(add(IntVector(8, 0), v, -1));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Solves for simple-root coordinates of vectors in the span of a simple system.
class SimpleBasis {
 public:
  explicit SimpleBasis(const IntMatrix& simple) : simple_(simple) {
    rank_ = static_cast<int>(simple.size());
    if (rank_ == 0) return;
    pivots_ = pivot_columns(simple);
    if (static_cast<int>(pivots_.size()) != rank_)
      throw InconsistencyError("simple roots are linearly dependent");
  }

  std::optional<IntVector> coords(const IntVector& v) const {
    const int r = rank_;
    if (r == 0) {
      for (auto x : v)
        if (x) return std::nullopt;
      return IntVector{};
    }
    std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(r),
                                          std::vector<mpq_class>(static_cast<std::size_t>(r + 1)));
    for (int k = 0; k < r; ++k) {
      const auto pc = static_cast<std::size_t>(pivots_[static_cast<std::size_t>(k)]);
      for (int i = 0; i < r; ++i)
        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = static_cast<long>(simple_[static_cast<std::size_t>(i)][pc]);
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] = static_cast<long>(v[pc]);
    }
    for (int c = 0; c < r; ++c) {
      int piv = c;
      while (piv < r && m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)] == 0) ++piv;
      if (piv == r) throw InconsistencyError("singular simple-root projection");
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(c)]);
      for (int i = 0; i < r; ++i) {
        if (i == c) continue;
        const mpq_class f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                            m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
        if (f == 0) continue;
        for (int j = c; j <= r; ++j)
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
              f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
      }
    }
    IntVector out(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      mpq_class x = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] /
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      if (x.get_den() != 1) return std::nullopt;
      out[static_cast<std::size_t>(i)] = x.get_num().get_si();
    }
    IntVector check(v.size(), 0);
    for (int i = 0; i < r; ++i) check = add(check, simple_[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i)]);
    if (check != v) return std::nullopt;
    return out;
  }

 private:
  IntMatrix simple_;
  int rank_ = 0;
  std::vector<int> pivots_;
};

}  // namespace

RootSystem::RootSystem(RootSystemType t) : type_(t) {
  const Family f = t.family();
  const int n = t.family_parameter();
  simple_ambient2_ = simple_system(f, n);
  SimpleBasis basis(simple_ambient2_);

  if (t.is_classical()) {
    for (auto& [tuple, v] : classical_roots(f, n)) {
      auto c = basis.coords(v);
      if (!c) throw InconsistencyError("classical root outside the simple lattice");
      for (auto x : *c)
        if (x < 0) throw InconsistencyError("classical root is not positive");
      roots_.push_back(Root{*c, v, 0, tuple});
    }
    std::sort(roots_.begin(), roots_.end(),
              [](const Root& a, const Root& b) { return *a.tuple < *b.tuple; });
  } else {
    for (auto& v : exceptional_roots(f)) {
      auto c = basis.coords(v);
      if (!c) throw InconsistencyError("exceptional root outside the simple lattice");
      const bool pos = std::all_of(c->begin(), c->end(), [](long long x) { return x >= 0; });
      const bool neg = std::all_of(c->begin(), c->end(), [](long long x) { return x <= 0; });
      if (!pos && !neg) throw InconsistencyError("root with mixed-sign simple coordinates");
      if (pos) roots_.push_back(Root{*c, v, 0, std::nullopt});
    }
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
      return key_less(linear_order_key(a), linear_order_key(b));
    });
  }

  const std::size_t N = roots_.size();
  for (std::size_t i = 0; i < N; ++i) {
    roots_[i].index = static_cast<int>(i);
    by_coords_[roots_[i].simple_coords] = static_cast<int>(i);
    if (roots_[i].tuple) by_tuple_[*roots_[i].tuple] = static_cast<int>(i);
    max_height_ = std::max(max_height_, roots_[i].height());
    if (roots_[i].height() == 1) simple_.push_back(static_cast<int>(i));
  }
  if (static_cast<int>(simple_.size()) != t.rank())
    throw InconsistencyError("simple root count differs from the rank");

  below_.assign(N, RootSet(N));
  above_.assign(N, RootSet(N));
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v)
      if (root_leq(roots_[u], roots_[v])) {
        below_[v].set(u);
        above_[u].set(v);
      }

  covers_ = {};
  lower_.assign(N, {});
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v) {
      if (u == v || !below_[v].test(u)) continue;
      if (roots_[v].height() != roots_[u].height() + 1) continue;
      covers_.emplace_back(static_cast<int>(u), static_cast<int>(v));
      lower_[v].push_back(static_cast<int>(u));
    }
  std::sort(covers_.begin(), covers_.end());

  for (std::size_t v = 0; v < N; ++v)
    if (below_[v].count() == N) highest_ = static_cast<int>(v);
}

std::shared_ptr<const RootSystem> RootSystem::build(const RootSystemType& type) {
  return std::shared_ptr<const RootSystem>(new RootSystem(type));
}

std::optional<int> RootSystem::find_coords(const IntVector& c) const {
  auto it = by_coords_.find(c);
  if (it == by_coords_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::find_tuple(const RootTuple& t) const {
  auto it = by_tuple_.find(t);
  if (it == by_tuple_.end()) return std::nullopt;
  return it->second;
}

std::vector<Root> positive_roots(const RootSystemType& type) { return RootSystem::build(type)->roots(); }

std::vector<std::pair<int, int>> hasse_covers(const RootSystem& sys) { return sys.covers(); }

}  // namespace tutte
