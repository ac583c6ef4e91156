#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tutte/exactpoly.hpp"
#include "tutte/ideals.hpp"

namespace tutte {

struct IdealExponents {
  std::vector<int> heights;    // lambda_i = #{u in I^c : ht(u) = i}, i = 1, 2, ...
  std::vector<int> exponents;  // m_1 <= m_2 <= ...
};

IdealExponents ideal_exponents(const Ideal& ideal);
// Exponents of the height partition of the roots outside members.
IdealExponents ideal_exponents(const RootSystem& sys, const RootSet& members);

// The characteristic polynomial of an arrangement of the given rank in
// dimension n.
UnivariatePolynomial characteristic_polynomial(const BivariatePolynomial& tutte, int n, int rank);

// (-1)^n chi(-1).
Integer region_count(const BivariatePolynomial& tutte, int n, int rank);

struct FactorizationReport {
  std::string type;
  std::vector<std::string> complement;  // simple coordinates of I^c
  UnivariatePolynomial characteristic{"q"};
  IdealExponents exponents;
  std::vector<int> roots;  // integer roots found by trial division, with multiplicity
  bool passed = false;
  std::string detail;

  nlohmann::json to_json() const;
};

// Whether chi(q) = q^(n - #exponents) * prod (q - m_i).
FactorizationReport check_exponent_factorization(const Ideal& ideal, const BivariatePolynomial& tutte);
FactorizationReport check_exponent_factorization(const RootSystem& sys, const RootSet& members,
                                                 const BivariatePolynomial& tutte);

}  // namespace tutte
