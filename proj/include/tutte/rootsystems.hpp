#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tutte/linalg.hpp"
#include "tutte/rootset.hpp"

namespace tutte {

enum class Family { A, B, C, D, G2, F4, E6 };

std::string family_name(Family f);

class RootSystemType {
 public:
  // Validates the rank constraints: A needs rank >= 1, B and C rank >= 2,
  // D rank >= 4, exceptional families their fixed rank.
  static RootSystemType make(Family family, int rank);
  // Accepts "A".."D" with a rank, "A7"-style names, and "G2", "F4", "E6".
  static RootSystemType parse(std::string_view name, std::optional<int> rank = std::nullopt);
  // Classical family of any rank >= 0; used for relabelled components.
  static RootSystemType unchecked(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  // The family parameter n: rank + 1 for A, the rank otherwise.
  int family_parameter() const { return family_ == Family::A ? rank_ + 1 : rank_; }
  // Length of the ambient coordinate vectors.
  int coordinate_dim() const;
  // Dimension of the space the arrangement lives in.
  int space_dim() const;
  bool is_classical() const;
  std::string name() const;

  auto operator<=>(const RootSystemType&) const = default;

 private:
  RootSystemType(Family f, int r) : family_(f), rank_(r) {}
  Family family_ = Family::A;
  int rank_ = 1;
};

// Hyperplane label of a classical root: (i,j) is x_i = x_j, (i,-j) is
// x_i = -x_j, (i,0) is x_i = 0.
struct RootTuple {
  int i = 0;
  int j = 0;
  auto operator<=>(const RootTuple&) const = default;
};

std::string format_tuple(const RootTuple& t);

struct Root {
  IntVector simple_coords;
  IntVector ambient2;  // twice the ambient coordinates
  int index = 0;
  std::optional<RootTuple> tuple;

  int height() const;
};

std::string format_coords(const IntVector& v);

// The word l(u): digit i repeated u_i times.
std::string linear_order_key(const Root& u);
// Order on keys read as natural numbers.
bool key_less(const std::string& a, const std::string& b);

// Coefficientwise dominance in the simple basis.
bool root_leq(const Root& u, const Root& v);

class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const RootSystemType& type);

  const RootSystemType& type() const { return type_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  const Root& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }

  bool leq(int u, int v) const { return below_[static_cast<std::size_t>(v)].test(static_cast<std::size_t>(u)); }
  // All roots w with w <= v.
  const RootSet& downset(int v) const { return below_.at(static_cast<std::size_t>(v)); }
  const RootSet& upset(int u) const { return above_.at(static_cast<std::size_t>(u)); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& lower_covers(int v) const { return lower_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& simple_indices() const { return simple_; }
  // Index of the highest root, or -1 for a reducible system.
  int highest() const { return highest_; }
  int max_height() const { return max_height_; }
  const IntMatrix& simple_ambient2() const { return simple_ambient2_; }

  std::optional<int> find_coords(const IntVector& simple_coords) const;
  std::optional<int> find_tuple(const RootTuple& t) const;

 private:
  explicit RootSystem(RootSystemType t);

  RootSystemType type_;
  std::vector<Root> roots_;
  IntMatrix simple_ambient2_;
  std::vector<RootSet> below_, above_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> lower_;
  std::vector<int> simple_;
  int highest_ = -1;
  int max_height_ = 0;
  std::map<IntVector, int> by_coords_;
  std::map<RootTuple, int> by_tuple_;
};

// Positive roots in canonical order: ascending linear order for exceptional
// types, lexicographic tuple order for classical types.
std::vector<Root> positive_roots(const RootSystemType& type);

// Hasse covers (u, v) with u covered by v, as indices.
std::vector<std::pair<int, int>> hasse_covers(const RootSystem& sys);

}  // namespace tutte
