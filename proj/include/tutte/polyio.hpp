#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "tutte/exactpoly.hpp"

namespace tutte {

// Canonical text: descending total degree, then descending degree in the
// first variable, e.g. "x^2 + 2xy - y + 3".
std::string to_text(const BivariatePolynomial& p);
std::string to_text(const UnivariatePolynomial& p);

// LaTeX: descending degree in the second variable, then in the first.
std::string to_latex(const BivariatePolynomial& p);
std::string to_latex(const UnivariatePolynomial& p);

nlohmann::json to_json(const BivariatePolynomial& p);
nlohmann::json to_json(const UnivariatePolynomial& p);
BivariatePolynomial bivariate_from_json(const nlohmann::json& j);

// Parses sums of monomials such as "2x^2y^{13} - q t^3 + 5"; exponents may
// be braced. Throws ConstraintError on malformed input.
BivariatePolynomial parse_bivariate(std::string_view text, const std::string& a = "x", const std::string& b = "y");
UnivariatePolynomial parse_univariate(std::string_view text, const std::string& var = "q");

}  // namespace tutte
