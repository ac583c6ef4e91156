#include "tutte/ideals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "tutte/errors.hpp"

namespace tutte {

namespace {

std::string describe_root(const RootSystem& sys, int i) {
  const Root& r = sys.root(i);
  if (r.tuple) return format_tuple(*r.tuple);
  return format_coords(r.simple_coords);
}

void require_classical(const RootSystem& sys) {
  if (!sys.type().is_classical())
    throw UnsupportedError("operation requires a classical type, got " + sys.type().name());
}

}  // namespace

std::optional<std::pair<int, int>> closure_violation(const RootSystem& sys, const RootSet& members) {
  if (members.size() != sys.size()) throw ConstraintError("root set size mismatch");
  for (auto [u, v] : sys.covers())
    if (members.test(static_cast<std::size_t>(u)) && !members.test(static_cast<std::size_t>(v)))
      return std::make_pair(u, v);
  return std::nullopt;
}

Ideal::Ideal(std::shared_ptr<const RootSystem> sys, RootSet members)
    : sys_(std::move(sys)), members_(std::move(members)) {
  if (!sys_) throw ConstraintError("ideal without a root system");
  if (auto bad = closure_violation(*sys_, members_))
    throw ConstraintError("not an ideal: " + describe_root(*sys_, bad->first) + " is in I and precedes " +
                          describe_root(*sys_, bad->second) + ", which is not");
}

Ideal Ideal::empty(std::shared_ptr<const RootSystem> sys) {
  const auto n = sys->size();
  return Ideal(std::move(sys), RootSet(n));
}

Ideal Ideal::from_complement(std::shared_ptr<const RootSystem> sys, const RootSet& complement) {
  return Ideal(std::move(sys), complement.complement());
}

Ideal Ideal::from_roots(std::shared_ptr<const RootSystem> sys, const std::vector<IntVector>& roots) {
  RootSet m(sys->size());
  for (const auto& c : roots) {
    auto i = sys->find_coords(c);
    if (!i) throw ConstraintError(format_coords(c) + " is not a positive root of " + sys->type().name());
    m.set(static_cast<std::size_t>(*i));
  }
  return Ideal(std::move(sys), std::move(m));
}

Ideal Ideal::from_generating_boxes(std::shared_ptr<const RootSystem> sys, const std::vector<RootTuple>& boxes) {
  require_classical(*sys);
  std::vector<int> idx;
  for (const auto& t : boxes) {
    auto i = sys->find_tuple(t);
    if (!i) throw ConstraintError(format_tuple(t) + " is not a box of " + sys->type().name());
    idx.push_back(*i);
  }
  RootSet comp(sys->size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (a != b && sys->leq(idx[a], idx[b]))
        throw ConstraintError("generating boxes " + format_tuple(boxes[a]) + " and " + format_tuple(boxes[b]) +
                              " are comparable");
    comp |= sys->downset(idx[a]);
  }
  return from_complement(std::move(sys), comp);
}

bool is_hasse_connected(const RootSystem& sys, const RootSet& members) {
  if (sys.highest() < 0 || !members.test(static_cast<std::size_t>(sys.highest()))) return false;
  RootSet seen(sys.size());
  std::vector<int> stack{sys.highest()};
  seen.set(static_cast<std::size_t>(sys.highest()));
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : sys.covers()) {
      const int w = a == v ? b : (b == v ? a : -1);
      if (w < 0 || !members.test(static_cast<std::size_t>(w)) || seen.test(static_cast<std::size_t>(w))) continue;
      seen.set(static_cast<std::size_t>(w));
      stack.push_back(w);
    }
  }
  return seen == members;
}

IdealStream::IdealStream(std::shared_ptr<const RootSystem> sys) : sys_(std::move(sys)) {
  const auto n = sys_->size();
  order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) order_[i] = static_cast<int>(i);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](int a, int b) { return sys_->root(a).height() < sys_->root(b).height(); });
  pos_of_.resize(n);
  for (std::size_t p = 0; p < n; ++p) pos_of_[static_cast<std::size_t>(order_[p])] = static_cast<int>(p);
  bits_.assign(n, 0);
}

bool IdealStream::allowed(std::size_t pos) const {
  for (int c : sys_->lower_covers(order_[pos]))
    if (!bits_[static_cast<std::size_t>(pos_of_[static_cast<std::size_t>(c)])]) return false;
  return true;
}

std::optional<Ideal> IdealStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    std::size_t k = bits_.size();
    bool found = false;
    while (k-- > 0) {
      if (!bits_[k] && allowed(k)) {
        found = true;
        break;
      }
    }
    if (!found) {
      done_ = true;
      return std::nullopt;
    }
    bits_[k] = 1;
    std::fill(bits_.begin() + static_cast<std::ptrdiff_t>(k) + 1, bits_.end(), 0);
  }
  started_ = true;
  RootSet comp(sys_->size());
  for (std::size_t p = 0; p < bits_.size(); ++p)
    if (bits_[p]) comp.set(static_cast<std::size_t>(order_[p]));
  return Ideal::from_complement(sys_, comp);
}

std::vector<Ideal> enumerate_ideals(const std::shared_ptr<const RootSystem>& sys) {
  std::vector<Ideal> out;
  IdealStream s(sys);
  while (auto i = s.next()) out.push_back(std::move(*i));
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::uint64_t count_ideals(const std::shared_ptr<const RootSystem>& sys) {
  std::uint64_t n = 0;
  IdealStream s(sys);
  while (s.next()) ++n;
  return n;
}

Arrangement arrangement_of(const Ideal& ideal) {
  const RootSystem& sys = ideal.system();
  Arrangement a{sys.type(), {}, {}, {}, {}, sys.type().space_dim()};
  for (int i : ideal.complement().indices()) {
    const Root& r = sys.root(i);
    a.roots.push_back(i);
    a.normals.push_back(r.ambient2);
    a.simple_normals.push_back(r.simple_coords);
    if (r.tuple) a.tuples.push_back(*r.tuple);
  }
  return a;
}

std::vector<RootTuple> IdealComplement::hyperplanes() const {
  std::vector<RootTuple> out;
  for (int i : roots.indices()) out.push_back(*system->root(i).tuple);
  return out;
}

std::vector<RootTuple> IdealComplement::original_hyperplanes() const {
  std::vector<RootTuple> out;
  for (const auto& t : hyperplanes()) {
    const int i = variables.at(static_cast<std::size_t>(t.i - 1));
    const int j = t.j == 0 ? 0 : (t.j > 0 ? 1 : -1) * variables.at(static_cast<std::size_t>(std::abs(t.j) - 1));
    out.push_back({i, j});
  }
  return out;
}

IdealComplement complement_of(const Ideal& ideal) {
  require_classical(ideal.system());
  IdealComplement c{ideal.system_ptr(), ideal.complement(), {}};
  for (int v = 1; v <= c.m(); ++v) c.variables.push_back(v);
  return c;
}

std::set<Box> boxes_of(const IdealComplement& c) {
  std::set<Box> out;
  for (const auto& t : c.hyperplanes()) out.insert(box_of(c.family(), c.m(), t));
  return out;
}

namespace {

std::vector<int> generator_indices(const IdealComplement& c) {
  const RootSystem& sys = *c.system;
  std::vector<int> gens;
  const auto idx = c.roots.indices();
  for (int u : idx) {
    bool maximal = true;
    for (int v : idx)
      if (v != u && sys.leq(u, v)) {
        maximal = false;
        break;
      }
    if (maximal) gens.push_back(u);
  }
  const Family f = c.family();
  const int m = c.m();
  std::sort(gens.begin(), gens.end(), [&](int a, int b) {
    return box_of(f, m, *sys.root(a).tuple) < box_of(f, m, *sys.root(b).tuple);
  });
  return gens;
}

// Labels appearing in each generated box set.
std::vector<std::set<int>> appearances(const IdealComplement& c, const std::vector<int>& gens) {
  std::vector<std::set<int>> out;
  for (int g : gens) {
    std::set<int> labels;
    RootSet down = c.system->downset(g);
    down &= c.roots;
    for (int u : down.indices()) {
      const auto& t = *c.system->root(u).tuple;
      labels.insert(t.i);
      labels.insert(t.j);
    }
    out.push_back(std::move(labels));
  }
  return out;
}

std::set<int> signature_from(const std::vector<std::set<int>>& app, int x) {
  std::set<int> s;
  for (std::size_t l = 0; l < app.size(); ++l)
    if (app[l].count(x)) s.insert(static_cast<int>(l) + 1);
  return s;
}

bool meets(const std::set<int>& a, const std::set<int>& b) {
  for (int x : a)
    if (b.count(x)) return true;
  return false;
}

}  // namespace

std::vector<RootTuple> generating_boxes(const IdealComplement& c) {
  std::vector<RootTuple> out;
  for (int g : generator_indices(c)) out.push_back(*c.system->root(g).tuple);
  return out;
}

bool is_full(const IdealComplement& c) {
  return ShiftedDiagram::of_family(c.family(), c.m()).is_full(boxes_of(c));
}

bool is_connected(const IdealComplement& c) {
  return ShiftedDiagram::of_family(c.family(), c.m()).is_connected(boxes_of(c));
}

std::set<int> signature(const IdealComplement& c, int x) {
  const Family f = c.family();
  if (std::abs(x) > c.m()) throw ConstraintError("variable " + std::to_string(x) + " out of range");
  if (x == 0 && f != Family::B && f != Family::C)
    throw ConstraintError("the signature of 0 is defined for types B and C only");
  if (x < 0 && f == Family::A) throw ConstraintError("type A has no negative variables");
  return signature_from(appearances(c, generator_indices(c)), x);
}

std::vector<IdealComplement> decompose_components(const IdealComplement& c) {
  const Family f = c.family();
  const int m = c.m();
  // Hyperplanes sharing a variable belong to the same component.
  std::vector<int> parent(static_cast<std::size_t>(m) + 1);
  for (int v = 0; v <= m; ++v) parent[static_cast<std::size_t>(v)] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  const auto all = c.hyperplanes();
  for (const auto& t : all)
    if (t.j != 0) parent[static_cast<std::size_t>(find(t.i))] = find(std::abs(t.j));
  std::map<int, std::vector<RootTuple>> groups;
  for (const auto& t : all) groups[find(t.i)].push_back(t);

  std::vector<IdealComplement> out;
  for (const auto& [root, tuples] : groups) {
    bool diagonal = false;
    std::set<int> vars;
    for (const auto& t : tuples) {
      diagonal = diagonal || t.j <= 0;
      vars.insert(t.i);
      if (t.j != 0) vars.insert(std::abs(t.j));
    }
    std::map<int, int> local;
    std::vector<int> original;
    for (int v : vars) {
      local[v] = static_cast<int>(local.size()) + 1;
      original.push_back(c.variables.at(static_cast<std::size_t>(v - 1)));
    }
    const Family nf = diagonal ? f : Family::A;
    const int k = static_cast<int>(vars.size());
    auto sys = RootSystem::build(RootSystemType::unchecked(nf, nf == Family::A ? k - 1 : k));
    RootSet roots(sys->size());
    for (const auto& t : tuples) {
      RootTuple nt{local[t.i], t.j == 0 ? 0 : (t.j > 0 ? local[t.j] : -local[-t.j])};
      auto i = sys->find_tuple(nt);
      if (!i) throw InconsistencyError("relabelled root " + format_tuple(nt) + " missing");
      roots.set(static_cast<std::size_t>(*i));
    }
    if (closure_violation(*sys, roots.complement()))
      throw InconsistencyError("relabelled component is not an ideal complement");
    out.push_back(IdealComplement{sys, roots, original});
  }
  std::sort(out.begin(), out.end(),
            [](const IdealComplement& a, const IdealComplement& b) { return a.variables < b.variables; });
  return out;
}

BlockPartition partition_in_accordance(const IdealComplement& c) {
  const Family f = c.family();
  const int m = c.m();
  BlockPartition bp;
  bp.family = f;
  bp.m = m;
  const auto gens = generator_indices(c);
  for (int g : gens) bp.generators.push_back(*c.system->root(g).tuple);
  const auto app = appearances(c, gens);

  std::set<int> appearing;
  for (const auto& a : app) appearing.insert(a.begin(), a.end());

  std::map<std::set<int>, std::vector<int>> a_groups, b_groups;
  for (int i = 1; i <= m; ++i) {
    const bool in_b = f != Family::A && appearing.count(-i);
    if (in_b)
      b_groups[signature_from(app, -i)].push_back(i);
    else
      a_groups[signature_from(app, i)].push_back(i);
  }

  const auto hs_list = c.hyperplanes();
  const std::set<RootTuple> hs(hs_list.begin(), hs_list.end());
  auto plus = [&](int u, int v) { return hs.count({std::min(u, v), std::max(u, v)}) > 0; };
  auto minus = [&](int u, int v) { return hs.count({std::min(u, v), -std::max(u, v)}) > 0; };
  auto zero = [&](int u) { return hs.count({u, 0}) > 0; };

  // Split groups until every member sees the same hyperplanes towards the
  // variables outside its group.
  auto refine = [&](std::map<std::set<int>, std::vector<int>>& groups,
                    std::vector<std::pair<std::vector<int>, std::set<int>>>& out) {
    for (auto& [sig, elems] : groups) out.emplace_back(elems, sig);
  };
  std::vector<std::pair<std::vector<int>, std::set<int>>> a_tmp, b_tmp;
  refine(a_groups, a_tmp);
  refine(b_groups, b_tmp);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto* list : {&a_tmp, &b_tmp}) {
      std::vector<std::pair<std::vector<int>, std::set<int>>> next;
      for (auto& [elems, sig] : *list) {
        const std::set<int> inside(elems.begin(), elems.end());
        std::map<std::vector<char>, std::vector<int>> split;
        std::vector<std::vector<char>> order;
        for (int u : elems) {
          std::vector<char> key{static_cast<char>(zero(u))};
          for (int w = 1; w <= m; ++w)
            if (!inside.count(w)) {
              key.push_back(static_cast<char>(plus(u, w)));
              key.push_back(static_cast<char>(minus(u, w)));
            }
          if (!split.count(key)) order.push_back(key);
          split[key].push_back(u);
        }
        if (split.size() > 1) changed = true;
        for (const auto& key : order) next.emplace_back(split[key], sig);
      }
      *list = std::move(next);
    }
  }
  std::sort(a_tmp.begin(), a_tmp.end());
  std::sort(b_tmp.begin(), b_tmp.end());
  for (auto& [elems, sig] : a_tmp) {
    bp.a_blocks.push_back(elems);
    bp.a_signatures.push_back(sig);
  }
  for (auto& [elems, sig] : b_tmp) {
    bp.b_blocks.push_back(elems);
    bp.b_signatures.push_back(sig);
  }

  const std::size_t k = bp.blocks();
  bp.plus.assign(k, std::vector<char>(k, 0));
  bp.minus.assign(k, std::vector<char>(k, 0));
  bp.zero.assign(k, 0);
  for (std::size_t x = 0; x < k; ++x) {
    const auto& bx = bp.block(x);
    bp.zero[x] = zero(bx[0]);
    for (std::size_t y = 0; y < k; ++y) {
      const auto& by = bp.block(y);
      if (x == y && bx.size() < 2) continue;
      const int u = bx[0], v = x == y ? bx[1] : by[0];
      bp.plus[x][y] = plus(u, v);
      bp.minus[x][y] = minus(u, v);
    }
    for (std::size_t a = 0; a < bx.size(); ++a)
      for (std::size_t b = a + 1; b < bx.size(); ++b)
        if (plus(bx[a], bx[b]) != static_cast<bool>(bp.plus[x][x]) ||
            minus(bx[a], bx[b]) != static_cast<bool>(bp.minus[x][x]))
          throw InconsistencyError("block " + std::to_string(bx[a]) + ".." + std::to_string(bx[b]) +
                                   " has mixed internal hyperplanes");
  }

  const int ra = static_cast<int>(bp.a_blocks.size());
  const int rb = static_cast<int>(bp.b_blocks.size());
  bp.r.assign(static_cast<std::size_t>(ra), {});
  for (int u = 0; u < ra; ++u)
    for (int l = u + 1; l < ra; ++l)
      if (meets(bp.a_signatures[static_cast<std::size_t>(u)], bp.a_signatures[static_cast<std::size_t>(l)]))
        bp.r[static_cast<std::size_t>(u)].push_back(l);
  bp.r_a.assign(static_cast<std::size_t>(rb), {});
  bp.s.assign(static_cast<std::size_t>(rb), {});
  for (int v = 0; v < rb; ++v) {
    const auto& sv = bp.b_signatures[static_cast<std::size_t>(v)];
    for (int l = 0; l < ra; ++l)
      if (meets(sv, bp.a_signatures[static_cast<std::size_t>(l)])) bp.r_a[static_cast<std::size_t>(v)].push_back(l);
    for (int h = 0; h < v; ++h)
      if (meets(sv, bp.b_signatures[static_cast<std::size_t>(h)])) bp.s[static_cast<std::size_t>(v)].push_back(h);
  }
  if (f == Family::B || f == Family::C) {
    bp.zero_signature = signature_from(app, 0);
    for (int l = 0; l < ra; ++l)
      if (meets(bp.zero_signature, bp.a_signatures[static_cast<std::size_t>(l)])) bp.r0.push_back(l);
    for (int h = 0; h < rb; ++h)
      if (meets(bp.zero_signature, bp.b_signatures[static_cast<std::size_t>(h)])) bp.s0.push_back(h);
  }
  return bp;
}

std::set<RootTuple> reconstruct_hyperplanes(const BlockPartition& bp) {
  std::set<RootTuple> out;
  auto plus = [&](int a, int b) { out.insert({std::min(a, b), std::max(a, b)}); };
  auto both = [&](int a, int b) {
    plus(a, b);
    out.insert({std::min(a, b), -std::max(a, b)});
  };
  for (std::size_t u = 0; u < bp.a_blocks.size(); ++u) {
    const auto& au = bp.a_blocks[u];
    for (std::size_t x = 0; x < au.size(); ++x)
      for (std::size_t y = x + 1; y < au.size(); ++y) plus(au[x], au[y]);
    for (int l : bp.r[u])
      for (int a : au)
        for (int b : bp.a_blocks[static_cast<std::size_t>(l)]) plus(a, b);
  }
  for (std::size_t v = 0; v < bp.b_blocks.size(); ++v) {
    const auto& bv = bp.b_blocks[v];
    for (std::size_t x = 0; x < bv.size(); ++x)
      for (std::size_t y = x + 1; y < bv.size(); ++y) both(bv[x], bv[y]);
    for (int l : bp.r_a[v])
      for (int a : bp.a_blocks[static_cast<std::size_t>(l)])
        for (int b : bv) both(a, b);
    for (int h : bp.s[v])
      for (int a : bp.b_blocks[static_cast<std::size_t>(h)])
        for (int b : bv) both(a, b);
  }
  for (int l : bp.r0)
    for (int a : bp.a_blocks[static_cast<std::size_t>(l)]) out.insert({a, 0});
  for (int h : bp.s0)
    for (int b : bp.b_blocks[static_cast<std::size_t>(h)]) out.insert({b, 0});
  return out;
}

std::set<RootTuple> model_hyperplanes(const BlockPartition& bp) {
  std::set<RootTuple> out;
  const std::size_t k = bp.blocks();
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x; y < k; ++y)
      for (int u : bp.block(x))
        for (int v : bp.block(y)) {
          if (x == y && u >= v) continue;
          if (bp.plus[x][y]) out.insert({std::min(u, v), std::max(u, v)});
          if (bp.minus[x][y]) out.insert({std::min(u, v), -std::max(u, v)});
        }
  for (std::size_t x = 0; x < k; ++x)
    if (bp.zero[x])
      for (int u : bp.block(x)) out.insert({u, 0});
  return out;
}

std::string format_partition(const BlockPartition& bp) {
  std::vector<std::vector<int>> all = bp.a_blocks;
  all.insert(all.end(), bp.b_blocks.begin(), bp.b_blocks.end());
  std::sort(all.begin(), all.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < all.size(); ++i) {
    os << (i ? "|" : "") << '{';
    for (std::size_t k = 0; k < all[i].size(); ++k) os << (k ? "," : "") << all[i][k];
    os << '}';
  }
  return os.str();
}

}  // namespace tutte
