#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tutte {

using Integer = mpz_class;
using Rational = mpq_class;

class UnivariatePolynomial;

// Sparse polynomial in two variables with big-integer coefficients. The
// variable names are labels only and do not take part in equality.
class BivariatePolynomial {
 public:
  using Exponent = std::pair<int, int>;

  explicit BivariatePolynomial(std::string a = "x", std::string b = "y");
  static BivariatePolynomial constant(const Integer& c, std::string a = "x", std::string b = "y");
  static BivariatePolynomial monomial(const Integer& c, int i, int j, std::string a = "x",
                                      std::string b = "y");

  const std::string& var_a() const { return a_; }
  const std::string& var_b() const { return b_; }
  BivariatePolynomial renamed(std::string a, std::string b) const;

  const std::map<Exponent, Integer>& terms() const { return terms_; }
  Integer coeff(int i, int j) const;
  void add_term(int i, int j, const Integer& c);
  bool is_zero() const { return terms_.empty(); }
  int degree_a() const;
  int degree_b() const;
  int total_degree() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const Integer& c);
  friend BivariatePolynomial operator+(BivariatePolynomial p, const BivariatePolynomial& q) { return p += q; }
  friend BivariatePolynomial operator-(BivariatePolynomial p, const BivariatePolynomial& q) { return p -= q; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q);
  friend BivariatePolynomial operator*(BivariatePolynomial p, const Integer& c) { return p *= c; }
  bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }

  Integer evaluate(const Integer& a, const Integer& b) const;
  Rational evaluate(const Rational& a, const Rational& b) const;
  // P(a + da, b + db).
  BivariatePolynomial shifted(const Integer& da, const Integer& db) const;
  // Substitutes a constant for the second variable.
  UnivariatePolynomial at_b(const Integer& b) const;

 private:
  std::string a_, b_;
  std::map<Exponent, Integer> terms_;
};

// Dense polynomial in one variable with rational coefficients.
class UnivariatePolynomial {
 public:
  explicit UnivariatePolynomial(std::string var = "q");
  UnivariatePolynomial(std::vector<Rational> coeffs, std::string var = "q");
  static UnivariatePolynomial from_integers(const std::vector<Integer>& coeffs, std::string var = "q");
  static UnivariatePolynomial monomial(const Rational& c, int k, std::string var = "q");

  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const;
  bool is_zero() const { return c_.empty(); }
  bool is_integral() const;
  std::vector<Integer> integer_coeffs() const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator*=(const Rational& c);
  friend UnivariatePolynomial operator+(UnivariatePolynomial p, const UnivariatePolynomial& q) { return p += q; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial p, const UnivariatePolynomial& q) { return p -= q; }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& p, const UnivariatePolynomial& q);
  friend UnivariatePolynomial operator*(UnivariatePolynomial p, const Rational& c) { return p *= c; }
  bool operator==(const UnivariatePolynomial& o) const { return c_ == o.c_; }

  Rational evaluate(const Rational& x) const;
  UnivariatePolynomial compose(const UnivariatePolynomial& inner) const;
  // Quotient by (var - root) when the remainder vanishes.
  std::optional<UnivariatePolynomial> divide_linear(const Rational& root) const;

 private:
  void trim();
  std::string var_;
  std::vector<Rational> c_;
};

Integer binomial(long n, long k);

// Interpolates a polynomial in (q, t) from its values at q = x_i, each a
// polynomial in t. Every coefficient must come out integral.
BivariatePolynomial lagrange_interpolate(const std::vector<std::pair<Integer, UnivariatePolynomial>>& points,
                                         std::string q = "q", std::string t = "t");

// T(x, y) = cb((x - 1)(y - 1), y) / (y - 1)^rank.
BivariatePolynomial coboundary_to_tutte(const BivariatePolynomial& cb, int rank);
// cb(q, t) = (t - 1)^rank T(1 + q / (t - 1), t).
BivariatePolynomial tutte_to_coboundary(const BivariatePolynomial& tutte, int rank);
// chi(q) = (-1)^rank q^(n - rank) T(1 - q, 0).
UnivariatePolynomial tutte_to_characteristic(const BivariatePolynomial& tutte, int n, int rank);

inline Integer evaluate(const BivariatePolynomial& p, const Integer& a, const Integer& b) {
  return p.evaluate(a, b);
}

}  // namespace tutte
