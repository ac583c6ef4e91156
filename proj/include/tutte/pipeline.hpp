#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tutte/exactpoly.hpp"
#include "tutte/ideals.hpp"

namespace tutte {

enum class Engine { Auto, FFMethod, Crapo, Oracle };

std::string engine_name(Engine e);
Engine parse_engine(const std::string& name);
// Auto resolves to the finite field method for classical types and to
// basis activities for exceptional types.
Engine resolve_engine(Engine e, const RootSystemType& type);

struct EngineLimits {
  std::uint64_t max_points = 100'000'000;
  std::uint64_t max_subsets = 100'000'000;
  int max_oracle_elements = 24;
  std::vector<long> primes;
};

struct TutteResult {
  Engine engine = Engine::Auto;
  BivariatePolynomial tutte{"x", "y"};
  BivariatePolynomial coboundary{"q", "t"};
  int rank = 0;
  int dimension = 0;
  std::size_t hyperplanes = 0;
  std::vector<long> primes;
  std::string note;
};

TutteResult compute_tutte(const Ideal& ideal, Engine engine = Engine::Auto, const EngineLimits& limits = {});

}  // namespace tutte
