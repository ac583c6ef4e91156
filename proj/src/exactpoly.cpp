#include "tutte/exactpoly.hpp"

#include <algorithm>
#include <set>

#include "tutte/errors.hpp"

namespace tutte {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

Integer ipow(const Integer& base, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Rational qpow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Coefficients of (1 + s)^e for the given shift s.
std::vector<Integer> shifted_powers(const Integer& s, int e) {
  std::vector<Integer> out(static_cast<std::size_t>(e) + 1);
  for (int k = 0; k <= e; ++k) out[static_cast<std::size_t>(k)] = binomial(e, k) * ipow(s, e - k);
  return out;
}

}  // namespace

BivariatePolynomial::BivariatePolynomial(std::string a, std::string b) : a_(std::move(a)), b_(std::move(b)) {}

BivariatePolynomial BivariatePolynomial::constant(const Integer& c, std::string a, std::string b) {
  return monomial(c, 0, 0, std::move(a), std::move(b));
}

BivariatePolynomial BivariatePolynomial::monomial(const Integer& c, int i, int j, std::string a, std::string b) {
  BivariatePolynomial p(std::move(a), std::move(b));
  p.add_term(i, j, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::renamed(std::string a, std::string b) const {
  BivariatePolynomial p(*this);
  p.a_ = std::move(a);
  p.b_ = std::move(b);
  return p;
}

Integer BivariatePolynomial::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivariatePolynomial::add_term(int i, int j, const Integer& c) {
  if (i < 0 || j < 0) throw ConstraintError("negative exponent");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int BivariatePolynomial::degree_a() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivariatePolynomial::degree_b() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  BivariatePolynomial r(p.a_, p.b_);
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_) r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
  return r;
}

Integer BivariatePolynomial::evaluate(const Integer& a, const Integer& b) const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c * ipow(a, e.first) * ipow(b, e.second);
  return s;
}

Rational BivariatePolynomial::evaluate(const Rational& a, const Rational& b) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += Rational(c) * qpow(a, e.first) * qpow(b, e.second);
  return s;
}

BivariatePolynomial BivariatePolynomial::shifted(const Integer& da, const Integer& db) const {
  BivariatePolynomial r(a_, b_);
  for (const auto& [e, c] : terms_) {
    const auto pa = shifted_powers(da, e.first);
    const auto pb = shifted_powers(db, e.second);
    for (int i = 0; i <= e.first; ++i) {
      if (sgn(pa[static_cast<std::size_t>(i)]) == 0) continue;
      for (int j = 0; j <= e.second; ++j)
        r.add_term(i, j, c * pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)]);
    }
  }
  return r;
}

UnivariatePolynomial BivariatePolynomial::at_b(const Integer& b) const {
  std::vector<Integer> out(static_cast<std::size_t>(std::max(degree_a(), 0)) + 1);
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e.first)] += c * ipow(b, e.second);
  return UnivariatePolynomial::from_integers(out, a_);
}

UnivariatePolynomial::UnivariatePolynomial(std::string var) : var_(std::move(var)) {}

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs, std::string var)
    : var_(std::move(var)), c_(std::move(coeffs)) {
  trim();
}

UnivariatePolynomial UnivariatePolynomial::from_integers(const std::vector<Integer>& coeffs, std::string var) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.emplace_back(x);
  return UnivariatePolynomial(std::move(c), std::move(var));
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& c, int k, std::string var) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return UnivariatePolynomial(std::move(v), std::move(var));
}

Rational UnivariatePolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

bool UnivariatePolynomial::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.get_den() == 1; });
}

std::vector<Integer> UnivariatePolynomial::integer_coeffs() const {
  std::vector<Integer> out;
  for (const auto& r : c_) {
    if (r.get_den() != 1) throw InconsistencyError("non-integral coefficient " + r.get_str());
    out.push_back(r.get_num());
  }
  return out;
}

void UnivariatePolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& p, const UnivariatePolynomial& q) {
  if (p.c_.empty() || q.c_.empty()) return UnivariatePolynomial(p.var_);
  std::vector<Rational> r(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
  return UnivariatePolynomial(std::move(r), p.var_);
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational s = 0;
  for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
  return s;
}

UnivariatePolynomial UnivariatePolynomial::compose(const UnivariatePolynomial& inner) const {
  UnivariatePolynomial r(inner.var_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * inner;
    r += UnivariatePolynomial({c_[i]}, inner.var_);
  }
  return r;
}

std::optional<UnivariatePolynomial> UnivariatePolynomial::divide_linear(const Rational& root) const {
  if (c_.empty()) return *this;
  std::vector<Rational> q(c_.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    carry = carry * root + c_[i];
    if (i > 0) q[i - 1] = carry;
  }
  if (carry != 0) return std::nullopt;
  return UnivariatePolynomial(std::move(q), var_);
}

BivariatePolynomial lagrange_interpolate(const std::vector<std::pair<Integer, UnivariatePolynomial>>& points,
                                         std::string q, std::string t) {
  std::set<Integer> xs;
  for (const auto& [x, v] : points)
    if (!xs.insert(x).second) throw ConstraintError("interpolation abscissae must be distinct");
  const std::size_t m = points.size();
  std::vector<UnivariatePolynomial> basis;
  for (std::size_t i = 0; i < m; ++i) {
    UnivariatePolynomial l({Rational(1)}, q);
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const Rational d = Rational(points[i].first - points[j].first);
      l = l * UnivariatePolynomial({Rational(-points[j].first) / d, Rational(1) / d}, q);
    }
    basis.push_back(std::move(l));
  }
  int tdeg = -1;
  for (const auto& [x, v] : points) tdeg = std::max(tdeg, v.degree());
  BivariatePolynomial out(q, t);
  for (int k = 0; k <= tdeg; ++k) {
    UnivariatePolynomial ck(q);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational y = points[i].second.coeff(k);
      if (y != 0) ck += basis[i] * y;
    }
    if (!ck.is_integral())
      throw InconsistencyError("interpolated coefficient of " + t + "^" + std::to_string(k) + " is not integral");
    const auto ints = ck.integer_coeffs();
    for (std::size_t d = 0; d < ints.size(); ++d) out.add_term(static_cast<int>(d), k, ints[d]);
  }
  return out;
}

BivariatePolynomial coboundary_to_tutte(const BivariatePolynomial& cb, int rank) {
  if (rank < 0) throw ConstraintError("negative rank");
  // H(X, Y) = cb(XY, 1 + Y), then T(1 + X, 1 + Y) = H / Y^rank.
  BivariatePolynomial h("x", "y");
  for (const auto& [e, c] : cb.terms()) {
    const int i = e.first, j = e.second;
    for (int k = 0; k <= j; ++k) h.add_term(i, i + k, c * binomial(j, k));
  }
  BivariatePolynomial t("x", "y");
  for (const auto& [e, c] : h.terms()) {
    if (e.second < rank)
      throw InconsistencyError("coboundary polynomial is not divisible by (y - 1)^" + std::to_string(rank));
    t.add_term(e.first, e.second - rank, c);
  }
  return t.shifted(-1, -1);
}

BivariatePolynomial tutte_to_coboundary(const BivariatePolynomial& tutte, int rank) {
  if (rank < 0) throw ConstraintError("negative rank");
  const BivariatePolynomial d = tutte.shifted(1, 1);
  BivariatePolynomial out("q", "t");
  for (const auto& [e, c] : d.terms()) {
    const int a = e.first, b = e.second;
    const int p = rank - a + b;
    if (p < 0) throw ConstraintError("polynomial is not of Tutte shape for rank " + std::to_string(rank));
    for (int k = 0; k <= p; ++k) {
      Integer coef = c * binomial(p, k);
      if ((p - k) % 2) coef = -coef;
      out.add_term(a, k, coef);
    }
  }
  return out;
}

UnivariatePolynomial tutte_to_characteristic(const BivariatePolynomial& tutte, int n, int rank) {
  if (rank < 0 || n < rank) throw ConstraintError("characteristic polynomial needs 0 <= rank <= n");
  UnivariatePolynomial tx = tutte.at_b(0);
  UnivariatePolynomial chi = tx.compose(UnivariatePolynomial({Rational(1), Rational(-1)}, "q"));
  chi = chi * UnivariatePolynomial::monomial(rank % 2 ? Rational(-1) : Rational(1), n - rank, "q");
  return UnivariatePolynomial(chi.coeffs(), "q");
}

}  // namespace tutte
