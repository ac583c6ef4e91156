#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tutte/ideals.hpp"

namespace tutte::cli {

enum ExitCode { kOk = 0, kValidation = 1, kGuard = 2, kMismatch = 3 };

// {"type": "G2", "rank": 2, "roots": [[3,1],[3,2]]} with either "roots"
// (simple coordinates of the roots of I) or "boxes" (generating boxes of I^c);
// neither means the empty ideal.
Ideal ideal_from_json(const nlohmann::json& spec);
nlohmann::json ideal_to_json(const Ideal& ideal);

// Default cache location: $TUTTE_CACHE_DIR, $XDG_CACHE_HOME/tutte or ~/.cache/tutte.
std::string default_cache_dir();

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tutte::cli
