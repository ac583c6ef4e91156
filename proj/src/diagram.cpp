#include "tutte/diagram.hpp"

#include <queue>

#include "tutte/errors.hpp"

namespace tutte {

ShiftedDiagram::ShiftedDiagram(std::vector<std::pair<int, int>> bounds) : bounds_(std::move(bounds)) {
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (bounds_[i].first > bounds_[i].second) throw ConstraintError("diagram row is empty");
    if (i > 0 && (bounds_[i].first < bounds_[i - 1].first || bounds_[i].second > bounds_[i - 1].second))
      throw ConstraintError("diagram rows must have l non-decreasing and r non-increasing");
  }
}

ShiftedDiagram ShiftedDiagram::of_family(Family f, int n) {
  std::vector<std::pair<int, int>> b;
  switch (f) {
    case Family::A:
      for (int i = 1; i <= n - 1; ++i) b.emplace_back(1, n - i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) b.emplace_back(i, 2 * n - i);
      break;
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) b.emplace_back(i, 2 * n - 1 - i);
      break;
    default:
      throw UnsupportedError("diagrams exist for classical types only");
  }
  return ShiftedDiagram(std::move(b));
}

bool ShiftedDiagram::contains(const Box& b) const {
  return b.row >= 1 && b.row <= rows() && b.col >= left(b.row) && b.col <= right(b.row);
}

std::vector<Box> ShiftedDiagram::boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= rows(); ++i)
    for (int j = left(i); j <= right(i); ++j) out.push_back({i, j});
  return out;
}

std::set<Box> ShiftedDiagram::generated(const Box& b) const {
  if (!contains(b)) throw ConstraintError("box outside the diagram");
  std::set<Box> out;
  for (int u = b.row; u <= rows(); ++u)
    for (int v = std::max(b.col, left(u)); v <= right(u); ++v) out.insert({u, v});
  return out;
}

bool ShiftedDiagram::is_open(const std::set<Box>& boxes) const {
  for (const auto& b : boxes) {
    if (!contains(b)) return false;
    for (const auto& g : generated(b))
      if (!boxes.count(g)) return false;
  }
  return true;
}

std::vector<Box> ShiftedDiagram::generating_boxes(const std::set<Box>& open) const {
  if (!is_open(open)) throw ConstraintError("box set is not open");
  std::vector<Box> out;
  for (const auto& b : open) {
    bool minimal = true;
    for (const auto& o : open)
      if (o != b && o.row <= b.row && o.col <= b.col) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(b);
  }
  return out;
}

bool ShiftedDiagram::is_full(const std::set<Box>& boxes) const {
  for (int i = 1; i <= rows(); ++i)
    if (!boxes.count({i, right(i)})) return false;
  return true;
}

std::vector<std::set<Box>> ShiftedDiagram::components(const std::set<Box>& boxes) const {
  std::vector<std::set<Box>> out;
  std::set<Box> seen;
  for (const auto& start : boxes) {
    if (seen.count(start)) continue;
    std::set<Box> comp;
    std::queue<Box> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      Box b = q.front();
      q.pop();
      comp.insert(b);
      const Box nbrs[4] = {{b.row - 1, b.col}, {b.row + 1, b.col}, {b.row, b.col - 1}, {b.row, b.col + 1}};
      for (const auto& nb : nbrs)
        if (boxes.count(nb) && !seen.count(nb)) {
          seen.insert(nb);
          q.push(nb);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool ShiftedDiagram::is_connected(const std::set<Box>& boxes) const {
  return !boxes.empty() && components(boxes).size() == 1;
}

Box box_of(Family f, int n, const RootTuple& t) {
  const int i = t.i, j = t.j;
  switch (f) {
    case Family::A:
      return {i, n - j + 1};
    case Family::B:
      if (j < 0) return {i, -j - 1};
      if (j == 0) return {i, n};
      return {i, 2 * n - j + 1};
    case Family::C:
      if (j == 0) return {i, i};
      if (j < 0) return {i, -j};
      return {i, 2 * n - j + 1};
    case Family::D:
      if (j < 0) return {i, -j - 1};
      return {i, 2 * n - j};
    default:
      throw UnsupportedError("diagrams exist for classical types only");
  }
}

RootTuple tuple_at(Family f, int n, const Box& b) {
  const int r = b.row, c = b.col;
  switch (f) {
    case Family::A:
      return {r, n - c + 1};
    case Family::B:
      if (c < n) return {r, -(c + 1)};
      if (c == n) return {r, 0};
      return {r, 2 * n - c + 1};
    case Family::C:
      if (c == r) return {r, 0};
      if (c <= n) return {r, -c};
      return {r, 2 * n - c + 1};
    case Family::D:
      if (c <= n - 1) return {r, -(c + 1)};
      return {r, 2 * n - c};
    default:
      throw UnsupportedError("diagrams exist for classical types only");
  }
}

}  // namespace tutte
