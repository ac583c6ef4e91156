#include "tutte/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tutte/errors.hpp"
#include "tutte/ffmethod.hpp"
#include "tutte/pipeline.hpp"
#include "tutte/polyio.hpp"
#include "tutte/specialize.hpp"

namespace tutte::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kEngineVersion = "1";

class MismatchError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string type;
  std::optional<int> rank;
  std::string ideal_file;
  std::string roots;
  std::string boxes;
  std::string engine = "auto";
  std::string engines = "auto,oracle";
  std::string format = "text";
  std::string out;
  std::string primes;
  std::uint64_t max_points = 100'000'000;
  std::uint64_t max_subsets = 100'000'000;
  bool no_cache = false;
  bool all_ideals = false;
  std::string cache_dir;
};

json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConstraintError(what + " is not valid JSON: " + e.what());
  }
}

std::vector<IntVector> int_rows(const json& j, const std::string& what) {
  if (!j.is_array()) throw ConstraintError(what + " must be an array of integer arrays");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ConstraintError(what + " must be an array of integer arrays");
    IntVector v;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw ConstraintError(what + " entries must be integers");
      v.push_back(x.get<long long>());
    }
    rows.push_back(std::move(v));
  }
  return rows;
}

std::shared_ptr<const RootSystem> system_of(const std::string& type, std::optional<int> rank) {
  if (type.empty()) throw ConstraintError("--type is required");
  return RootSystem::build(RootSystemType::parse(type, rank));
}

std::vector<long> parse_primes(const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConstraintError("--primes expects a comma-separated list of integers, got '" + item + "'");
    }
  }
  return out;
}

Ideal ideal_of(const Options& o) {
  const int given = !o.ideal_file.empty() + !o.roots.empty() + !o.boxes.empty();
  if (given > 1) throw ConstraintError("give at most one of --ideal-file, --roots and --boxes");
  if (!o.ideal_file.empty()) {
    std::ifstream in(o.ideal_file);
    if (!in) throw ConstraintError("cannot read ideal file " + o.ideal_file);
    std::stringstream buf;
    buf << in.rdbuf();
    json spec = parse_json_arg(buf.str(), "ideal file " + o.ideal_file);
    if (!o.type.empty() && !spec.contains("type")) spec["type"] = o.type;
    if (o.rank && !spec.contains("rank")) spec["rank"] = *o.rank;
    return ideal_from_json(spec);
  }
  json spec;
  spec["type"] = o.type;
  if (o.rank) spec["rank"] = *o.rank;
  if (!o.roots.empty()) spec["roots"] = parse_json_arg(o.roots, "--roots");
  if (!o.boxes.empty()) spec["boxes"] = parse_json_arg(o.boxes, "--boxes");
  return ideal_from_json(spec);
}

EngineLimits limits_of(const Options& o) {
  EngineLimits l;
  l.max_points = o.max_points;
  l.max_subsets = o.max_subsets;
  l.primes = parse_primes(o.primes);
  return l;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

json result_to_json(const TutteResult& r) {
  json j;
  j["engine"] = engine_name(r.engine);
  j["rank"] = r.rank;
  j["dimension"] = r.dimension;
  j["hyperplanes"] = r.hyperplanes;
  j["primes"] = r.primes;
  j["note"] = r.note;
  j["tutte"] = to_json(r.tutte);
  j["coboundary"] = to_json(r.coboundary);
  return j;
}

TutteResult result_from_json(const json& j) {
  TutteResult r;
  r.engine = parse_engine(j.at("engine").get<std::string>());
  r.rank = j.at("rank").get<int>();
  r.dimension = j.at("dimension").get<int>();
  r.hyperplanes = j.at("hyperplanes").get<std::size_t>();
  r.primes = j.at("primes").get<std::vector<long>>();
  r.note = j.at("note").get<std::string>();
  r.tutte = bivariate_from_json(j.at("tutte"));
  r.coboundary = bivariate_from_json(j.at("coboundary"));
  return r;
}

// Content-addressed store; entries are written once via atomic rename.
TutteResult cached_compute(const Ideal& ideal, const Options& o) {
  const Engine engine = resolve_engine(parse_engine(o.engine), ideal.system().type());
  const EngineLimits limits = limits_of(o);
  const std::string cache_dir = o.cache_dir.empty() ? default_cache_dir() : o.cache_dir;
  std::string primes;
  for (long p : limits.primes) primes += std::to_string(p) + ",";
  const std::string key_text = ideal.system().type().name() + "|" + ideal.complement().to_string() + "|" +
                               engine_name(engine) + "|" + primes + "|" + kEngineVersion;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(key_text)));
  const fs::path path = fs::path(cache_dir) / (std::string(hex) + ".json");

  if (!o.no_cache && fs::exists(path)) {
    std::ifstream in(path);
    try {
      const json entry = json::parse(in);
      if (entry.at("key").get<std::string>() == key_text) return result_from_json(entry.at("result"));
    } catch (const std::exception&) {
    }
  }

  const auto start = std::chrono::steady_clock::now();
  TutteResult r = compute_tutte(ideal, engine, limits);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!o.no_cache) {
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    if (!ec && !fs::exists(path)) {
      json entry;
      entry["key"] = key_text;
      entry["result"] = result_to_json(r);
      entry["provenance"] = {{"engine", engine_name(r.engine)}, {"primes", r.primes}, {"wall_seconds", wall}};
      const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
      {
        std::ofstream f(tmp);
        f << entry.dump(2) << "\n";
      }
      fs::rename(tmp, path, ec);
      if (ec) fs::remove(tmp, ec);
    }
  }
  return r;
}

json header(const Ideal& ideal, const TutteResult& r) {
  json j;
  j["type"] = ideal.system().type().name();
  j["ideal"] = ideal_to_json(ideal);
  j["engine"] = engine_name(r.engine);
  j["rank"] = r.rank;
  j["dimension"] = r.dimension;
  j["hyperplanes"] = r.hyperplanes;
  j["primes"] = r.primes;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

template <class P>
std::string emit(const Options& o, json head, const char* field, const P& poly) {
  if (o.format == "text") return to_text(poly) + "\n";
  if (o.format == "latex") return to_latex(poly) + "\n";
  head[field] = to_json(poly);
  return head.dump(2) + "\n";
}

std::string cmd_roots(const Options& o) {
  const auto sys = system_of(o.type, o.rank);
  json arr = json::array();
  std::string text;
  for (const auto& u : sys->roots()) {
    json j;
    j["index"] = u.index;
    j["height"] = u.height();
    j["simple"] = u.simple_coords;
    if (u.tuple) j["tuple"] = {u.tuple->i, u.tuple->j};
    arr.push_back(j);
    text += std::to_string(u.index) + " " + std::to_string(u.height()) + " " + format_coords(u.simple_coords);
    if (u.tuple) text += " " + format_tuple(*u.tuple);
    text += "\n";
  }
  if (o.format == "json") return json{{"type", sys->type().name()}, {"roots", arr}}.dump(2) + "\n";
  return text;
}

std::string cmd_ideals(const Options& o) {
  const auto sys = system_of(o.type, o.rank);
  const auto all = enumerate_ideals(sys);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& I : all) arr.push_back(ideal_to_json(I));
    return json{{"type", sys->type().name()}, {"count", all.size()}, {"ideals", arr}}.dump(2) + "\n";
  }
  std::string text = std::to_string(all.size()) + " ideals of " + sys->type().name() + "\n";
  for (const auto& I : all) text += ideal_to_json(I)["generators"].dump() + "\n";
  return text;
}

std::string cmd_minors(const Options& o) {
  const auto type = RootSystemType::parse(o.type, o.rank);
  const MinorProfile prof = minor_set(type);
  if (o.format == "json") {
    json vals = json::array();
    for (const auto& m : prof.minors) vals.push_back(m.get_str());
    return json{{"type", type.name()}, {"minors", vals}}.dump(2) + "\n";
  }
  std::string text = "{";
  bool first = true;
  for (const auto& a : prof.absolute_values()) {
    text += first ? "" : ", ";
    first = false;
    const bool both = a != 0 && prof.minors.count(a) && prof.minors.count(-a);
    text += both ? "±" + a.get_str() : (prof.minors.count(a) ? a.get_str() : Integer(-a).get_str());
  }
  return text + "}\n";
}

std::vector<Engine> engine_pair(const std::string& text) {
  std::vector<Engine> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_engine(item));
  if (out.size() != 2) throw ConstraintError("--engines expects two engines, e.g. crapo,oracle");
  return out;
}

std::string cmd_verify(const Options& o, bool& mismatch) {
  const auto engines = engine_pair(o.engines);
  const EngineLimits limits = limits_of(o);
  std::vector<Ideal> ideals;
  if (o.all_ideals)
    ideals = enumerate_ideals(system_of(o.type, o.rank));
  else
    ideals.push_back(ideal_of(o));
  json bad = json::array();
  for (const auto& I : ideals) {
    const auto a = compute_tutte(I, engines[0], limits);
    const auto b = compute_tutte(I, engines[1], limits);
    if (!(a.tutte == b.tutte))
      bad.push_back({{"ideal", ideal_to_json(I)}, {engine_name(a.engine), to_text(a.tutte)}, {engine_name(b.engine), to_text(b.tutte)}});
  }
  mismatch = !bad.empty();
  if (o.format == "json") {
    json j{{"checked", ideals.size()},
           {"engines", {engine_name(engines[0]), engine_name(engines[1])}},
           {"mismatches", bad}};
    return j.dump(2) + "\n";
  }
  std::string text = "checked " + std::to_string(ideals.size()) + " ideal(s) with " + engine_name(engines[0]) + " and " +
                     engine_name(engines[1]) + ": " + std::to_string(bad.size()) + " mismatch(es)\n";
  for (const auto& m : bad) text += m.dump() + "\n";
  return text;
}

void add_type_options(CLI::App* sub, Options& o) {
  sub->add_option("--type", o.type, "Root system type, e.g. A, B, G2, or A7");
  sub->add_option("--rank", o.rank, "Rank of the root system");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "latex", "text"}));
  sub->add_option("--out", o.out, "Write output to this file");
}

void add_ideal_options(CLI::App* sub, Options& o) {
  sub->add_option("--ideal-file", o.ideal_file, "JSON ideal spec");
  sub->add_option("--roots", o.roots, "Roots of I as simple coordinates, JSON");
  sub->add_option("--boxes", o.boxes, "Generating boxes of I^c as tuples, JSON");
  sub->add_option("--max-points", o.max_points, "Limit on brute-force points");
  sub->add_option("--max-subsets", o.max_subsets, "Limit on enumerated subsets");
  sub->add_option("--primes", o.primes, "Comma-separated primes for interpolation");
}

void add_cache_options(CLI::App* sub, Options& o) {
  sub->add_option("--engine", o.engine, "auto, ffmethod, crapo or oracle");
  sub->add_flag("--no-cache", o.no_cache, "Disable the result cache");
  sub->add_option("--cache-dir", o.cache_dir, "Cache directory");
}

}  // namespace

Ideal ideal_from_json(const json& spec) {
  if (!spec.is_object()) throw ConstraintError("ideal spec must be a JSON object");
  for (auto it = spec.begin(); it != spec.end(); ++it)
    if (it.key() != "type" && it.key() != "rank" && it.key() != "roots" && it.key() != "boxes")
      throw ConstraintError("unknown ideal spec field '" + it.key() + "'");
  if (!spec.contains("type") || !spec["type"].is_string()) throw ConstraintError("ideal spec needs a string 'type'");
  std::optional<int> rank;
  if (spec.contains("rank")) {
    if (!spec["rank"].is_number_integer()) throw ConstraintError("'rank' must be an integer");
    rank = spec["rank"].get<int>();
  }
  const auto sys = system_of(spec["type"].get<std::string>(), rank);
  if (spec.contains("roots") && spec.contains("boxes")) throw ConstraintError("give either 'roots' or 'boxes'");
  if (spec.contains("roots")) return Ideal::from_roots(sys, int_rows(spec["roots"], "'roots'"));
  if (spec.contains("boxes")) {
    std::vector<RootTuple> boxes;
    for (const auto& b : int_rows(spec["boxes"], "'boxes'")) {
      if (b.size() != 2) throw ConstraintError("each box is a pair [i, j]");
      boxes.push_back({static_cast<int>(b[0]), static_cast<int>(b[1])});
    }
    return Ideal::from_generating_boxes(sys, boxes);
  }
  return Ideal::empty(sys);
}

json ideal_to_json(const Ideal& ideal) {
  const auto& sys = ideal.system();
  json roots = json::array(), gens = json::array();
  for (int i : ideal.members().indices()) {
    roots.push_back(sys.root(i).simple_coords);
    bool minimal = true;
    for (int l : sys.lower_covers(i))
      if (ideal.members().test(static_cast<std::size_t>(l))) minimal = false;
    if (minimal) gens.push_back(sys.root(i).simple_coords);
  }
  return json{{"type", sys.type().name()}, {"size", ideal.size()}, {"generators", gens}, {"roots", roots}};
}

std::string default_cache_dir() {
  if (const char* d = std::getenv("TUTTE_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return (fs::path(x) / "tutte").string();
  if (const char* h = std::getenv("HOME"); h && *h) return (fs::path(h) / ".cache" / "tutte").string();
  return (fs::temp_directory_path() / "tutte-cache").string();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tutte polynomials of ideal arrangements"};
  app.require_subcommand(1);

  auto* roots = app.add_subcommand("roots", "List the positive roots");
  add_type_options(roots, o);
  auto* ideals = app.add_subcommand("ideals", "Enumerate the ideals of the root poset");
  add_type_options(ideals, o);
  auto* minors = app.add_subcommand("minors", "Minor set of the positive roots");
  add_type_options(minors, o);
  std::vector<CLI::App*> poly_cmds;
  for (const char* name : {"tutte", "coboundary", "charpoly"}) {
    auto* sub = app.add_subcommand(name, std::string("Compute the ") + name + " polynomial of an ideal arrangement");
    add_type_options(sub, o);
    add_ideal_options(sub, o);
    add_cache_options(sub, o);
    poly_cmds.push_back(sub);
  }
  auto* verify = app.add_subcommand("verify", "Compare two engines");
  add_type_options(verify, o);
  add_ideal_options(verify, o);
  verify->add_option("--engines", o.engines, "Two engines, e.g. crapo,oracle");
  verify->add_flag("--all-ideals", o.all_ideals, "Check every ideal of the type");

  std::vector<std::string> argv_store{"tutte"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kValidation;
  }

  int code = kOk;
  std::string text;
  try {
    if (roots->parsed()) {
      text = cmd_roots(o);
    } else if (ideals->parsed()) {
      text = cmd_ideals(o);
    } else if (minors->parsed()) {
      text = cmd_minors(o);
    } else if (verify->parsed()) {
      bool mismatch = false;
      text = cmd_verify(o, mismatch);
      if (mismatch) code = kMismatch;
    } else {
      const Ideal ideal = ideal_of(o);
      const TutteResult r = cached_compute(ideal, o);
      const json head = header(ideal, r);
      if (poly_cmds[0]->parsed())
        text = emit(o, head, "tutte", r.tutte);
      else if (poly_cmds[1]->parsed())
        text = emit(o, head, "coboundary", r.coboundary);
      else
        text = emit(o, head, "characteristic", characteristic_polynomial(r.tutte, r.dimension, r.rank));
    }
  } catch (const GuardError& e) {
    err << "guard refused: " << e.what() << "\n";
    return kGuard;
  } catch (const InconsistencyError& e) {
    err << "invariant failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const ArithmeticOverflow& e) {
    err << "invariant failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "invalid input: cannot write " << o.out << "\n";
      return kValidation;
    }
    f << text;
  }
  return code;
}

}  // namespace tutte::cli
