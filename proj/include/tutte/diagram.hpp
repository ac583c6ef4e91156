#pragma once

#include <compare>
#include <set>
#include <utility>
#include <vector>

#include "tutte/rootsystems.hpp"

namespace tutte {

struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

// Rows i = 1..k occupy columns l_i..r_i with l non-decreasing and r
// non-increasing.
class ShiftedDiagram {
 public:
  explicit ShiftedDiagram(std::vector<std::pair<int, int>> bounds);
  // Diagram of a classical family with parameter n.
  static ShiftedDiagram of_family(Family f, int n);

  int rows() const { return static_cast<int>(bounds_.size()); }
  int left(int row) const { return bounds_.at(static_cast<std::size_t>(row - 1)).first; }
  int right(int row) const { return bounds_.at(static_cast<std::size_t>(row - 1)).second; }
  bool contains(const Box& b) const;
  std::vector<Box> boxes() const;

  // Boxes (u, v) with u >= i and v >= j.
  std::set<Box> generated(const Box& b) const;
  bool is_open(const std::set<Box>& boxes) const;
  // Minimal generators of an open set, ordered by row.
  std::vector<Box> generating_boxes(const std::set<Box>& open) const;
  // The rightmost box of every row lies in the set.
  bool is_full(const std::set<Box>& boxes) const;
  // Classes of the edge-sharing adjacency relation.
  std::vector<std::set<Box>> components(const std::set<Box>& boxes) const;
  bool is_connected(const std::set<Box>& boxes) const;

 private:
  std::vector<std::pair<int, int>> bounds_;
};

Box box_of(Family f, int n, const RootTuple& t);
RootTuple tuple_at(Family f, int n, const Box& b);

}  // namespace tutte
