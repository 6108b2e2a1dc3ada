#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spherevol/polytope.hpp"

namespace spherevol {

inline constexpr const char* kVersion = "0.1.0";

/// Runs the command line with `args` excluding the program name. Returns the
/// process exit code: 0 success, 1 validation failure, 2 numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"dim": d, "vertices": [[...], ...]}, doubles printed round-trip exact.
std::string polytope_to_json(const InscribedPolytope& p);

/// Parses a polytope document. Malformed text or fields throw ValidationError
/// naming the line or field.
InscribedPolytope polytope_from_json_text(const std::string& text);

}  // namespace spherevol
