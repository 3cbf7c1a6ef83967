#pragma once

#include <string>

#include <json.hpp>

namespace prank {

/// Minimal TOML-subset reader covering the curve-file grammar:
/// [table] and [[array-of-table]] headers (dotted names allowed),
/// key = value with integer, quoted-string, boolean and flat-array
/// values, and # comments. Produces a JSON object mirror.
nlohmann::json toml_parse(const std::string& text);

nlohmann::json toml_parse_file(const std::string& path);

}  // namespace prank
