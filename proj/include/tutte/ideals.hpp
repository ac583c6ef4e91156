#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tutte/diagram.hpp"
#include "tutte/rootset.hpp"
#include "tutte/rootsystems.hpp"

namespace tutte {

// An upward-closed subset I of the positive roots.
class Ideal {
 public:
  Ideal(std::shared_ptr<const RootSystem> sys, RootSet members);

  static Ideal empty(std::shared_ptr<const RootSystem> sys);
  static Ideal from_complement(std::shared_ptr<const RootSystem> sys, const RootSet& complement);
  // Roots of I given by simple coordinates.
  static Ideal from_roots(std::shared_ptr<const RootSystem> sys, const std::vector<IntVector>& roots);
  // Generating boxes of I^c given as hyperplane tuples (classical types).
  static Ideal from_generating_boxes(std::shared_ptr<const RootSystem> sys,
                                     const std::vector<RootTuple>& boxes);

  const RootSystem& system() const { return *sys_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return sys_; }
  const RootSet& members() const { return members_; }
  RootSet complement() const { return members_.complement(); }
  std::size_t size() const { return members_.count(); }

  bool operator==(const Ideal& o) const { return sys_->type() == o.sys_->type() && members_ == o.members_; }

 private:
  std::shared_ptr<const RootSystem> sys_;
  RootSet members_;
};

// A pair (u, v) with u in the set, u <= v and v outside it, if any.
std::optional<std::pair<int, int>> closure_violation(const RootSystem& sys, const RootSet& members);

// True when the set contains the highest root and induces a connected
// subgraph of the Hasse diagram. Every non-empty ideal of an irreducible
// system passes; the converse fails in general.
bool is_hasse_connected(const RootSystem& sys, const RootSet& members);

// All ideals ordered by cardinality, then by bit set.
std::vector<Ideal> enumerate_ideals(const std::shared_ptr<const RootSystem>& sys);
std::uint64_t count_ideals(const std::shared_ptr<const RootSystem>& sys);

// Lazy enumeration in depth-first order over complements.
class IdealStream {
 public:
  explicit IdealStream(std::shared_ptr<const RootSystem> sys);
  std::optional<Ideal> next();

 private:
  bool allowed(std::size_t pos) const;

  std::shared_ptr<const RootSystem> sys_;
  std::vector<int> order_;  // roots by height
  std::vector<int> pos_of_;
  std::vector<char> bits_;  // complement membership by position
  bool started_ = false;
  bool done_ = false;
};

struct Arrangement {
  RootSystemType type;
  std::vector<int> roots;  // indices of I^c
  IntMatrix normals;       // doubled ambient coordinates
  IntMatrix simple_normals;
  std::vector<RootTuple> tuples;  // classical types only
  int dimension = 0;

  std::size_t size() const { return roots.size(); }
};

Arrangement arrangement_of(const Ideal& ideal);

// The complement of an ideal in a classical type, carried with a variable
// relabelling so that components can be treated as smaller types.
struct IdealComplement {
  std::shared_ptr<const RootSystem> system;
  RootSet roots;
  std::vector<int> variables;  // original label of local variable k + 1

  Family family() const { return system->type().family(); }
  // Number of variables (the family parameter).
  int m() const { return system->type().family_parameter(); }
  std::vector<RootTuple> hyperplanes() const;
  // Hyperplanes written with the original variable labels.
  std::vector<RootTuple> original_hyperplanes() const;
};

IdealComplement complement_of(const Ideal& ideal);

// Maximal roots of I^c ordered by diagram position.
std::vector<RootTuple> generating_boxes(const IdealComplement& c);
bool is_full(const IdealComplement& c);
bool is_connected(const IdealComplement& c);
std::set<Box> boxes_of(const IdealComplement& c);

// Labels l (1-based, in generating-box order) of the generated box sets in
// which the signed variable x appears.
std::set<int> signature(const IdealComplement& c, int x);

// Edge-adjacency components, relabelled onto consecutive variables. Components
// without diagonal roots become type A.
std::vector<IdealComplement> decompose_components(const IdealComplement& c);

// Blocks hold 1-based variables; adjacency lists hold 0-based block indices.
struct BlockPartition {
  Family family = Family::A;
  int m = 0;
  std::vector<RootTuple> generators;
  std::vector<std::vector<int>> a_blocks, b_blocks;
  std::vector<std::set<int>> a_signatures, b_signatures;
  std::set<int> zero_signature;
  std::vector<std::vector<int>> r;    // R^(u): later A-blocks meeting A^u
  std::vector<std::vector<int>> r_a;  // R_A^(v): A-blocks meeting B^v
  std::vector<std::vector<int>> s;    // S^(v): earlier B-blocks meeting B^v
  std::vector<int> r0, s0;            // blocks meeting the signature of 0
  // Relations read off the hyperplanes, blocks indexed A-blocks first:
  // plus[x][y] for x_u = x_v, minus[x][y] for x_u = -x_v, zero[x] for x_u = 0.
  std::vector<std::vector<char>> plus, minus;
  std::vector<char> zero;

  std::size_t blocks() const { return a_blocks.size() + b_blocks.size(); }
  const std::vector<int>& block(std::size_t x) const {
    return x < a_blocks.size() ? a_blocks[x] : b_blocks[x - a_blocks.size()];
  }
};

BlockPartition partition_in_accordance(const IdealComplement& c);
// Hyperplanes generated by the adjacency lists R, R_A, S, R0 and S0.
std::set<RootTuple> reconstruct_hyperplanes(const BlockPartition& bp);
// Hyperplanes generated by the block relations.
std::set<RootTuple> model_hyperplanes(const BlockPartition& bp);
std::string format_partition(const BlockPartition& bp);

}  // namespace tutte
