#pragma once

#include <string>
#include <vector>

#include "versal/serialize.hpp"

namespace versal::cli {

enum ExitCode : int { ok = 0, usage = 1, invalid = 2, verification = 3 };

struct Result {
  int exit_code = ok;
  std::string out;
  std::string err;
};

/// `args` excludes the program name.
Result run(const std::vector<std::string>& args);

/// Human-readable rendering of a JSON result: one "key: value" line per scalar, points as (x, y).
std::string render_text(const Json& j);

}  // namespace versal::cli
