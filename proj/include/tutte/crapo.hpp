#pragma once

#include <cstdint>
#include <vector>

#include "tutte/exactpoly.hpp"
#include "tutte/ideals.hpp"
#include "tutte/linalg.hpp"

namespace tutte {

// Ordered vectors over Q with integer entries; index order is the linear
// order used for activities.
class VectorConfig {
 public:
  VectorConfig() = default;
  VectorConfig(IntMatrix vectors, int dim);
  // Simple coordinates of I^c in canonical root order.
  static VectorConfig of_ideal(const Ideal& ideal);
  // Simple coordinates of the roots outside an arbitrary root set.
  static VectorConfig of_complement(const RootSystem& sys, const RootSet& members);

  std::size_t size() const { return v_.size(); }
  int dim() const { return dim_; }
  int rank() const { return rank_; }
  const IntMatrix& vectors() const { return v_; }
  const IntVector& operator[](std::size_t i) const { return v_[i]; }

  // new[k] = old[order[k]].
  VectorConfig permuted(const std::vector<int>& order) const;
  VectorConfig deleted(int i) const;
  VectorConfig contracted(int i) const;
  bool is_loop(int i) const;
  bool is_coloop(int i) const;

 private:
  IntMatrix v_;
  int dim_ = 0;
  int rank_ = 0;
};

int rank_of(const VectorConfig& cfg, const std::vector<int>& subset);

// Bases in lexicographic order; refused when C(#X, r) exceeds max_subsets.
std::vector<std::vector<int>> enumerate_bases(const VectorConfig& cfg, std::uint64_t max_subsets = 100'000'000);

struct BasisActivity {
  int internal = 0;
  int external = 0;
};

// Activities from the rank tests: b in B is internally active when no
// smaller x outside B can replace it, x outside B is externally active when
// it lies in the span of the basis elements after it.
BasisActivity activity(const VectorConfig& cfg, const std::vector<int>& basis);

// Sum over bases of x^internal y^external.
BivariatePolynomial tutte_crapo(const VectorConfig& cfg, std::uint64_t max_subsets = 100'000'000);
BivariatePolynomial tutte_crapo_serial(const VectorConfig& cfg, std::uint64_t max_subsets = 100'000'000);

// Sum over all subsets of (x - 1)^(r - r(B)) (y - 1)^(#B - r(B)).
BivariatePolynomial tutte_corank_nullity(const VectorConfig& cfg, int max_elements = 24);

}  // namespace tutte
