#include "tutte/pipeline.hpp"

#include "tutte/crapo.hpp"
#include "tutte/errors.hpp"
#include "tutte/ffmethod.hpp"

namespace tutte {

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::FFMethod: return "ffmethod";
    case Engine::Crapo: return "crapo";
    case Engine::Oracle: return "oracle";
  }
  return "auto";
}

Engine parse_engine(const std::string& name) {
  for (Engine e : {Engine::Auto, Engine::FFMethod, Engine::Crapo, Engine::Oracle})
    if (engine_name(e) == name) return e;
  throw ConstraintError("unknown engine '" + name + "' (expected auto, ffmethod, crapo or oracle)");
}

Engine resolve_engine(Engine e, const RootSystemType& type) {
  if (e == Engine::Auto) return type.is_classical() ? Engine::FFMethod : Engine::Crapo;
  if (e == Engine::FFMethod && !type.is_classical())
    throw UnsupportedError("engine ffmethod rejects exceptional type " + type.name());
  return e;
}

TutteResult compute_tutte(const Ideal& ideal, Engine engine, const EngineLimits& limits) {
  const auto& type = ideal.system().type();
  const Arrangement arr = arrangement_of(ideal);
  TutteResult res;
  res.engine = resolve_engine(engine, type);
  res.dimension = arr.dimension;
  res.hyperplanes = arr.size();
  switch (res.engine) {
    case Engine::FFMethod: {
      FFOptions opt;
      opt.primes = limits.primes;
      const CoboundaryResult cb = coboundary_polynomial(ideal, opt);
      res.coboundary = cb.polynomial;
      res.rank = cb.rank;
      res.primes = cb.primes;
      res.note = cb.note;
      res.tutte = coboundary_to_tutte(cb.polynomial, cb.rank);
      return res;
    }
    case Engine::Crapo:
    case Engine::Oracle: {
      const VectorConfig cfg = VectorConfig::of_ideal(ideal);
      res.rank = cfg.rank();
      res.tutte = res.engine == Engine::Crapo ? tutte_crapo(cfg, limits.max_subsets)
                                              : tutte_corank_nullity(cfg, limits.max_oracle_elements);
      res.coboundary = tutte_to_coboundary(res.tutte, res.rank);
      return res;
    }
    case Engine::Auto: break;
  }
  throw Error("unresolved engine");
}

}  // namespace tutte
