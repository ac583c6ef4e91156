#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tutte/crapo.hpp"
#include "tutte/errors.hpp"
#include "tutte/pipeline.hpp"
#include "tutte/specialize.hpp"

using namespace tutte;
using tutte::fixtures::sys;
using tutte::fixtures::xy;

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST(Specialize, RegionCountsOfFullArrangements) {
  for (int n = 2; n <= 4; ++n) {
    const auto a = compute_tutte(Ideal::empty(RootSystem::build(RootSystemType::make(Family::A, n - 1))));
    EXPECT_EQ(region_count(a.tutte, a.dimension, a.rank), factorial(n));
    const auto b = compute_tutte(Ideal::empty(RootSystem::build(RootSystemType::make(Family::B, n))));
    EXPECT_EQ(region_count(b.tutte, b.dimension, b.rank), factorial(n) * (Integer(1) << n));
    if (n == 4) {
      const auto d = compute_tutte(Ideal::empty(sys("D4")));
      EXPECT_EQ(region_count(d.tutte, d.dimension, d.rank), factorial(4) * 8);
    }
  }
  const auto g = compute_tutte(Ideal::empty(sys("G2")));
  EXPECT_EQ(region_count(g.tutte, g.dimension, g.rank), 12);
}

TEST(Specialize, CharacteristicPolynomial) {
  EXPECT_EQ(characteristic_polynomial(xy("x^2 + y^2 + 2x + 2y"), 2, 2).integer_coeffs(),
            (std::vector<Integer>{3, -4, 1}));
  EXPECT_EQ(characteristic_polynomial(xy("x"), 3, 1).integer_coeffs(), (std::vector<Integer>{0, 0, -1, 1}));
}

TEST(Specialize, IdealExponentsAreTheDualPartition) {
  const auto g = sys("G2");
  const auto I = fixtures::ideal(R"({"type": "G2", "roots": [[3,1],[3,2]]})");
  const auto e = ideal_exponents(I);
  EXPECT_EQ(e.heights, (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(e.exponents, (std::vector<int>{1, 3}));
}

TEST(Specialize, FactorizationHoldsOnSmallIdeals) {
  for (const char* name : {"A4", "B3", "C3", "D4", "G2"}) {
    for (const auto& I : enumerate_ideals(sys(name))) {
      const auto T = tutte_crapo(VectorConfig::of_ideal(I));
      const auto rep = check_exponent_factorization(I, T);
      EXPECT_TRUE(rep.passed) << name << " " << rep.detail;
    }
  }
}

TEST(Specialize, FactorizationReportsFailures) {
  // Two roots of B2 spanning the plane: chi = (q - 1)^2, heights {1, 1}.
  const auto b = sys("B2");
  const RootSet members = fixtures::members_of(*b, {{1, 1}, {1, 2}});
  const auto T = tutte_crapo(VectorConfig::of_complement(*b, members));
  EXPECT_TRUE(check_exponent_factorization(*b, members, T).passed);
  const RootSet odd = fixtures::members_of(*b, {{1, 2}, {1, 0}});
  const auto rep = check_exponent_factorization(*b, odd, tutte_crapo(VectorConfig::of_complement(*b, odd)));
  EXPECT_FALSE(rep.passed);
  EXPECT_FALSE(rep.detail.empty());
  EXPECT_TRUE(rep.to_json().contains("characteristic"));
}

TEST(Specialize, FactorizationHoldsOnSmallF4Complements) {
  int checked = 0;
  for (const auto& I : enumerate_ideals(sys("F4"))) {
    if (I.complement().count() > 20) continue;
    const auto rep = check_exponent_factorization(I, tutte_crapo(VectorConfig::of_ideal(I)));
    EXPECT_TRUE(rep.passed) << rep.detail;
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Specialize, ExponentsSumToTheHyperplaneCount) {
  for (const char* name : {"A4", "B3", "C3", "D4", "G2", "F4"}) {
    for (const auto& I : enumerate_ideals(sys(name))) {
      const auto e = ideal_exponents(I);
      int sum = 0;
      for (int x : e.exponents) sum += x;
      EXPECT_EQ(static_cast<std::size_t>(sum), I.complement().count()) << name;
    }
  }
}
