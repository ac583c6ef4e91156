#include "tutte/polyio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tutte/errors.hpp"

namespace tutte {

namespace {

std::string power(const std::string& var, int e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return var;
  return latex ? var + "^{" + std::to_string(e) + "}" : var + "^" + std::to_string(e);
}

std::string join_terms(const std::vector<std::pair<Integer, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [c, mono] = terms[k];
    const bool neg = sgn(c) < 0;
    if (k == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const Integer a = abs(c);
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + mono;
  }
  return out;
}

std::string render(const BivariatePolynomial& p, bool latex) {
  std::vector<std::pair<BivariatePolynomial::Exponent, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [latex](const auto& x, const auto& y) {
    const auto [i1, j1] = x.first;
    const auto [i2, j2] = y.first;
    if (latex) return j1 != j2 ? j1 > j2 : i1 > i2;
    return i1 + j1 != i2 + j2 ? i1 + j1 > i2 + j2 : i1 > i2;
  });
  std::vector<std::pair<Integer, std::string>> parts;
  for (const auto& [e, c] : terms)
    parts.emplace_back(c, power(p.var_a(), e.first, latex) + power(p.var_b(), e.second, latex));
  return join_terms(parts);
}

std::string render(const UnivariatePolynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(k);
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    const Rational a = abs(c);
    const std::string mono = power(p.var(), k, latex);
    std::string coef;
    if (a.get_den() == 1) {
      if (a != 1 || mono.empty()) coef = a.get_num().get_str();
    } else if (latex) {
      coef = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    } else {
      coef = "(" + a.get_str() + ")";
    }
    out += coef + mono;
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars) : vars_(std::move(vars)) {
    // Normalise the Unicode minus sign.
    std::string s(text);
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 && static_cast<unsigned char>(s[i + 1]) == 0x88 &&
          static_cast<unsigned char>(s[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += s[i];
      }
    }
    s_ = out;
  }

  // Returns (coefficient, exponents) per term.
  std::vector<std::pair<Integer, std::vector<int>>> parse() {
    std::vector<std::pair<Integer, std::vector<int>>> out;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip();
      out.push_back(term(sign));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ConstraintError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    return d;
  }

  int exponent() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    std::string d;
    if (peek() == '{') {
      ++pos_;
      skip();
      d = digits();
      skip();
      if (peek() != '}') fail("unbalanced brace in exponent");
      ++pos_;
    } else {
      d = digits();
    }
    if (d.empty()) fail("missing exponent");
    return std::stoi(d);
  }

  std::pair<Integer, std::vector<int>> term(int sign) {
    Integer c = 1;
    bool any = false;
    const std::string d = digits();
    if (!d.empty()) {
      c = Integer(d);
      any = true;
    }
    std::vector<int> e(vars_.size(), 0);
    while (true) {
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (s_.compare(pos_, 5, "\\cdot") == 0) {
        pos_ += 5;
        continue;
      }
      bool matched = false;
      for (std::size_t v = 0; v < vars_.size(); ++v) {
        if (s_.compare(pos_, vars_[v].size(), vars_[v]) == 0) {
          pos_ += vars_[v].size();
          e[v] += exponent();
          matched = true;
          any = true;
          break;
        }
      }
      if (!matched) break;
    }
    if (!any) fail("expected a coefficient or a variable");
    return {sign * c, e};
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

}  // namespace

std::string to_text(const BivariatePolynomial& p) { return render(p, false); }
std::string to_text(const UnivariatePolynomial& p) { return render(p, false); }
std::string to_latex(const BivariatePolynomial& p) { return render(p, true); }
std::string to_latex(const UnivariatePolynomial& p) { return render(p, true); }

nlohmann::json to_json(const BivariatePolynomial& p) {
  std::vector<std::pair<BivariatePolynomial::Exponent, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const auto [i1, j1] = x.first;
    const auto [i2, j2] = y.first;
    return i1 + j1 != i2 + j2 ? i1 + j1 > i2 + j2 : i1 > i2;
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : terms) arr.push_back({{"dx", e.first}, {"dy", e.second}, {"c", c.get_str()}});
  return {{"vars", {p.var_a(), p.var_b()}}, {"terms", arr}};
}

nlohmann::json to_json(const UnivariatePolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return {{"var", p.var()}, {"coeffs", arr}};
}

BivariatePolynomial bivariate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ConstraintError("polynomial JSON needs a 'terms' array");
  std::string a = "x", b = "y";
  if (j.contains("vars")) {
    const auto& v = j["vars"];
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      throw ConstraintError("'vars' must list two names");
    a = v[0].get<std::string>();
    b = v[1].get<std::string>();
  }
  BivariatePolynomial p(a, b);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("dx") || !t.contains("dy") || !t.contains("c"))
      throw ConstraintError("each term needs dx, dy and c");
    if (!t["dx"].is_number_integer() || !t["dy"].is_number_integer())
      throw ConstraintError("term degrees must be integers");
    const int dx = t["dx"].get<int>(), dy = t["dy"].get<int>();
    if (dx < 0 || dy < 0) throw ConstraintError("term degrees must be non-negative");
    Integer c;
    if (t["c"].is_string()) {
      if (c.set_str(t["c"].get<std::string>(), 10) != 0) throw ConstraintError("malformed coefficient");
    } else if (t["c"].is_number_integer()) {
      c = Integer(t["c"].get<long>());
    } else {
      throw ConstraintError("coefficient must be a decimal string");
    }
    p.add_term(dx, dy, c);
  }
  return p;
}

BivariatePolynomial parse_bivariate(std::string_view text, const std::string& a, const std::string& b) {
  BivariatePolynomial p(a, b);
  for (const auto& [c, e] : Parser(text, {a, b}).parse()) p.add_term(e[0], e[1], c);
  return p;
}

UnivariatePolynomial parse_univariate(std::string_view text, const std::string& var) {
  std::vector<Rational> coeffs;
  for (const auto& [c, e] : Parser(text, {var}).parse()) {
    if (static_cast<std::size_t>(e[0]) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(e[0]) + 1);
    coeffs[static_cast<std::size_t>(e[0])] += Rational(c);
  }
  return UnivariatePolynomial(std::move(coeffs), var);
}

}  // namespace tutte
