#include <gtest/gtest.h>

#include <set>

#include "reference_polynomials.hpp"
#include "test_support.hpp"
#include "tutte/errors.hpp"

using namespace tutte;
using tutte::fixtures::ideal;
using tutte::fixtures::sys;

namespace {

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::set<RootTuple> tuples(const std::vector<RootTuple>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Ideals, CountsMatchSubsetFilter) {
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    const auto s = sys(name);
    EXPECT_EQ(count_ideals(s), oracle::ideals_by_subsets(fixtures::simple_coords(*s))) << name;
  }
}

TEST(Ideals, CountsMatchAntichains) {
  for (const char* name : {"A5", "B4", "C4", "D5", "F4", "E6"}) {
    const auto s = sys(name);
    EXPECT_EQ(count_ideals(s), oracle::ideals_by_antichains(fixtures::simple_coords(*s))) << name;
  }
}

TEST(Ideals, TypeACountsAreCatalan) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(count_ideals(RootSystem::build(RootSystemType::make(Family::A, n))), catalan(n + 1));
}

TEST(Ideals, StreamAgreesWithEnumeration) {
  for (const char* name : {"B3", "D4", "G2"}) {
    const auto s = sys(name);
    std::set<RootSet> streamed;
    IdealStream st(s);
    while (auto I = st.next()) EXPECT_TRUE(streamed.insert(I->members()).second);
    std::set<RootSet> listed;
    for (const auto& I : enumerate_ideals(s)) listed.insert(I.members());
    EXPECT_EQ(streamed, listed) << name;
  }
}

TEST(Ideals, RejectsNonIdealsNamingThePair) {
  const auto g = sys("G2");
  try {
    Ideal::from_roots(g, {{2, 1}});
    FAIL();
  } catch (const ConstraintError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("(2,1)"), std::string::npos) << msg;
    EXPECT_NE(msg.find("(3,1)"), std::string::npos) << msg;
  }
  EXPECT_THROW(Ideal::from_roots(g, {{5, 5}}), ConstraintError);
  EXPECT_THROW(Ideal::from_generating_boxes(sys("A3"), {{1, 3}, {1, 2}}), ConstraintError);
  EXPECT_THROW(Ideal::from_generating_boxes(g, {{1, 2}}), Error);
}

TEST(Ideals, GeneratingBoxesRoundTrip) {
  for (const char* name : {"A4", "B3", "C3", "D4"}) {
    const auto s = sys(name);
    for (const auto& I : enumerate_ideals(s)) {
      const auto gens = generating_boxes(complement_of(I));
      EXPECT_EQ(Ideal::from_generating_boxes(s, gens), I) << name;
    }
  }
}

TEST(Ideals, HasseConnectedSets) {
  for (const char* name : {"A4", "B3", "D4", "G2", "F4"}) {
    const auto s = sys(name);
    for (const auto& I : enumerate_ideals(s))
      if (I.size() > 0) EXPECT_TRUE(is_hasse_connected(*s, I.members())) << name;
  }
  const auto f = sys("F4");
  const RootSet chain = fixtures::members_of(
      *f, {{1, 1, 1, 1}, {1, 1, 2, 1}, {1, 2, 2, 1}, {1, 2, 3, 1}, {1, 2, 3, 2}, {1, 2, 4, 2}, {1, 3, 4, 2}, {2, 3, 4, 2}});
  EXPECT_TRUE(is_hasse_connected(*f, chain));
  EXPECT_TRUE(closure_violation(*f, chain).has_value());
  EXPECT_FALSE(is_hasse_connected(*f, fixtures::members_of(*f, {{1, 3, 4, 2}})));
}

TEST(Ideals, SignaturesAndPartitionOfTheA7Example) {
  const auto c = complement_of(ideal(fixtures::kIdealA));
  const std::vector<std::set<int>> expect = {{1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {3, 4}, {3, 4}, {4}};
  for (int x = 1; x <= 8; ++x) EXPECT_EQ(signature(c, x), expect[static_cast<std::size_t>(x - 1)]) << x;
  EXPECT_EQ(format_partition(partition_in_accordance(c)), "{1}|{2,3}|{4,5}|{6,7}|{8}");
}

TEST(Ideals, PartitionsOfTheRankSixExamples) {
  EXPECT_EQ(format_partition(partition_in_accordance(complement_of(ideal(fixtures::kIdealB)))), "{1}|{2,3}|{4}|{5,6}");
  EXPECT_EQ(format_partition(partition_in_accordance(complement_of(ideal(fixtures::kIdealC)))), "{1}|{2,3}|{4}|{5}|{6}");
  EXPECT_EQ(format_partition(partition_in_accordance(complement_of(ideal(fixtures::kIdealD)))), "{1}|{2,3}|{4}|{5,6}");
}

TEST(Ideals, ComponentsCoverTheComplement) {
  for (const char* name : {"A5", "B4", "C4", "D5"}) {
    for (const auto& I : enumerate_ideals(sys(name))) {
      const auto whole = complement_of(I);
      std::set<RootTuple> joined;
      std::set<int> seen_vars;
      for (const auto& comp : decompose_components(whole)) {
        for (const auto& t : comp.original_hyperplanes()) EXPECT_TRUE(joined.insert(t).second);
        for (int v : comp.variables) EXPECT_TRUE(seen_vars.insert(v).second) << name;
      }
      EXPECT_EQ(joined, tuples(whole.hyperplanes())) << name;
    }
  }
}

TEST(Ideals, BlockRelationsReproduceEveryComponent) {
  for (const char* name : {"A5", "B4", "C4", "D4", "D5"}) {
    for (const auto& I : enumerate_ideals(sys(name))) {
      if (I.size() == 0) continue;
      for (const auto& comp : decompose_components(complement_of(I))) {
        const auto bp = partition_in_accordance(comp);
        EXPECT_EQ(model_hyperplanes(bp), tuples(comp.hyperplanes())) << name << " " << format_partition(bp);
      }
    }
  }
}

TEST(Ideals, AdjacencyListsReproduceTypeA) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& I : enumerate_ideals(RootSystem::build(RootSystemType::make(Family::A, n)))) {
      if (I.size() == 0) continue;
      for (const auto& comp : decompose_components(complement_of(I)))
        EXPECT_EQ(reconstruct_hyperplanes(partition_in_accordance(comp)), tuples(comp.hyperplanes()));
    }
  }
}

TEST(Diagram, OpenSetsAndGenerators) {
  const auto d = ShiftedDiagram::of_family(Family::A, 4);
  EXPECT_EQ(d.rows(), 3);
  const auto gen = d.generated({1, 2});
  EXPECT_TRUE(d.is_open(gen));
  EXPECT_EQ(d.generating_boxes(gen), (std::vector<Box>{Box{1, 2}}));
  for (const char* name : {"A4", "B3", "D4"}) {
    const auto s = sys(name);
    const auto f = s->type().family();
    const int n = s->type().family_parameter();
    for (const auto& r : s->roots()) EXPECT_EQ(tuple_at(f, n, box_of(f, n, *r.tuple)), *r.tuple);
  }
}

TEST(Ideals, WholeDiagramIsGeneratedByTheHighestRoot) {
  for (int n = 3; n <= 8; ++n) {
    const auto c = complement_of(Ideal::empty(RootSystem::build(RootSystemType::make(Family::A, n - 1))));
    EXPECT_EQ(generating_boxes(c), (std::vector<RootTuple>{{1, n}}));
    EXPECT_TRUE(is_full(c));
    EXPECT_TRUE(is_connected(c));
  }
}
