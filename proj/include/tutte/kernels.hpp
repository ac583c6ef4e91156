#pragma once

#include <cstdint>
#include <vector>

#include "tutte/exactpoly.hpp"
#include "tutte/ideals.hpp"

namespace tutte {

// counts[h] is the number of points of F_p^n lying on exactly h of the
// hyperplanes.
std::vector<Integer> point_profile_serial(const std::vector<RootTuple>& hyperplanes, int n, long p);
std::vector<Integer> point_profile_parallel(const std::vector<RootTuple>& hyperplanes, int n, long p);

// Blocks of variables with homogeneous relations: x_i = x_j inside or across
// blocks ("plus"), x_i = -x_j ("minus") and x_i = 0 ("zero").
struct BlockModel {
  bool signed_residues = false;  // types B, C, D
  std::vector<int> sizes;
  std::vector<char> within_plus, within_minus, zero;
  std::vector<std::vector<char>> cross_plus, cross_minus;
  int hyperplanes() const;
};

BlockModel block_model(const BlockPartition& bp);

// Point-count profile over F_p^m of the arrangement described by the model,
// computed one residue class (or pair of opposite classes) at a time.
std::vector<Integer> block_profile_parallel(const BlockModel& model, long p);
// The same profile as the literal sum over compositions of every block.
std::vector<Integer> block_profile_reference(const BlockPartition& bp, long p);

}  // namespace tutte
