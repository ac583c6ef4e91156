#include "tutte/specialize.hpp"

#include <algorithm>

#include "tutte/errors.hpp"
#include "tutte/linalg.hpp"
#include "tutte/polyio.hpp"

namespace tutte {

IdealExponents ideal_exponents(const Ideal& ideal) { return ideal_exponents(ideal.system(), ideal.members()); }

IdealExponents ideal_exponents(const RootSystem& sys, const RootSet& members) {
  IdealExponents e;
  for (int i : members.complement().indices()) {
    const int h = sys.root(i).height();
    if (static_cast<int>(e.heights.size()) < h) e.heights.resize(static_cast<std::size_t>(h), 0);
    ++e.heights[static_cast<std::size_t>(h - 1)];
  }
  const int top = e.heights.empty() ? 0 : e.heights.front();
  for (int i = 1; i <= top; ++i) {
    const auto m = std::count_if(e.heights.begin(), e.heights.end(), [&](int l) { return l >= top - i + 1; });
    e.exponents.push_back(static_cast<int>(m));
  }
  return e;
}

UnivariatePolynomial characteristic_polynomial(const BivariatePolynomial& tutte, int n, int rank) {
  return tutte_to_characteristic(tutte, n, rank);
}

Integer region_count(const BivariatePolynomial& tutte, int n, int rank) {
  Rational v = characteristic_polynomial(tutte, n, rank).evaluate(Rational(-1));
  if (n % 2) v = -v;
  if (v <= 0 || v.get_den() != 1)
    throw InconsistencyError("region count " + v.get_str() + " is not a positive integer");
  return v.get_num();
}

nlohmann::json FactorizationReport::to_json() const {
  nlohmann::json j;
  j["type"] = type;
  j["complement"] = complement;
  j["characteristic"] = tutte::to_json(characteristic);
  j["heights"] = exponents.heights;
  j["exponents"] = exponents.exponents;
  j["roots"] = roots;
  j["passed"] = passed;
  j["detail"] = detail;
  return j;
}

FactorizationReport check_exponent_factorization(const Ideal& ideal, const BivariatePolynomial& tutte) {
  return check_exponent_factorization(ideal.system(), ideal.members(), tutte);
}

FactorizationReport check_exponent_factorization(const RootSystem& sys, const RootSet& members,
                                                 const BivariatePolynomial& tutte) {
  FactorizationReport rep;
  rep.type = sys.type().name();
  for (int i : members.complement().indices()) rep.complement.push_back(format_coords(sys.root(i).simple_coords));
  rep.exponents = ideal_exponents(sys, members);
  const int dimension = sys.type().space_dim();
  IntMatrix rows;
  for (int i : members.complement().indices()) rows.push_back(sys.root(i).simple_coords);
  const int rank = rank_of(rows);
  rep.characteristic = characteristic_polynomial(tutte, dimension, rank);

  UnivariatePolynomial rest = rep.characteristic;
  for (int k = 0; k <= sys.max_height() && !rest.is_zero() && rest.degree() > 0;) {
    if (auto quo = rest.divide_linear(Rational(k))) {
      rest = *quo;
      rep.roots.push_back(k);
    } else {
      ++k;
    }
  }

  const int free = dimension - static_cast<int>(rep.exponents.exponents.size());
  std::vector<int> expected(static_cast<std::size_t>(std::max(free, 0)), 0);
  for (int m : rep.exponents.exponents) expected.push_back(m);
  std::sort(expected.begin(), expected.end());
  rep.passed = rest == UnivariatePolynomial::from_integers({1}, rest.var()) && rep.roots == expected;
  if (rep.passed)
    rep.detail = "splits over the ideal exponents";
  else
    rep.detail = "chi = " + to_text(rep.characteristic) + " does not split as q^" + std::to_string(free) +
                 " times the exponent factors";
  return rep;
}

}  // namespace tutte
