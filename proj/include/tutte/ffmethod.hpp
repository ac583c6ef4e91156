#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tutte/exactpoly.hpp"
#include "tutte/ideals.hpp"

namespace tutte {

struct MinorProfile {
  std::set<Integer> minors;
  int max_order = 0;
  std::size_t vectors = 0;

  std::set<Integer> absolute_values() const;
  // True when p divides some non-zero minor.
  bool excludes(long p) const;
};

// All k x k minors, k <= max_order, of the matrix with the given rows, taken
// with both signs since the rows of a vector set carry no order.
MinorProfile minor_set(const IntMatrix& rows, int max_order = -1, std::uint64_t max_minors = 50'000'000);
// Minors of the positive roots in integer ambient coordinates.
MinorProfile minor_set(const RootSystemType& type, int max_order = -1, std::uint64_t max_minors = 50'000'000);

bool is_prime(long p);
// The first `count` odd primes from 3 on, skipping primes that divide a
// non-zero minor.
std::vector<long> prime_plan(int count, const MinorProfile* minors = nullptr);

struct TProfile {
  long p = 0;
  int n = 0;
  std::vector<Integer> counts;
  UnivariatePolynomial as_polynomial() const { return UnivariatePolynomial::from_integers(counts, "t"); }
};

// Brute-force count over F_p^n, refused above max_points points.
TProfile count_points(const std::vector<RootTuple>& hyperplanes, int n, long p,
                      std::uint64_t max_points = 100'000'000);
TProfile count_points_serial(const std::vector<RootTuple>& hyperplanes, int n, long p,
                             std::uint64_t max_points = 100'000'000);

// cb(p, t) of a full connected ideal complement, from its block partition.
UnivariatePolynomial coboundary_ideal_at_prime(const BlockPartition& bp, long p);
// cb(p, t) of the full arrangement of type A (n variables), B or D.
UnivariatePolynomial coboundary_full_at_prime(Family family, int n, long p);

struct ComponentReport {
  Family family = Family::A;
  std::vector<int> variables;
  int rank = 0;
  std::string partition;
  std::vector<long> primes;
};

struct CoboundaryResult {
  BivariatePolynomial polynomial{"q", "t"};
  int rank = 0;
  std::vector<long> primes;
  std::vector<ComponentReport> components;
  std::string note;
};

struct FFOptions {
  std::vector<long> primes;  // replaces the default plan when non-empty
};

// Finite field method for an ideal of a classical type.
CoboundaryResult coboundary_polynomial(const Ideal& ideal, const FFOptions& opt = {});
// Full arrangement of a classical type from the composition closed forms.
CoboundaryResult coboundary_full(Family family, int n, const FFOptions& opt = {});
// Interpolation of brute-force point counts.
CoboundaryResult coboundary_bruteforce(const Ideal& ideal, std::uint64_t max_points = 100'000'000);

}  // namespace tutte
