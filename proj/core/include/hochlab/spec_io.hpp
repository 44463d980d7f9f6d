#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "hochlab/algebra.hpp"
#include "hochlab/groupoid.hpp"
#include "hochlab/hochschild.hpp"

namespace hochlab {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);

/// {"dim", "labels", "mult": [[i, j, [[k, "p/q"], ...]], ...], "unit",
///  "grading", "degree_cap", "truncated"}. Coefficients may be strings or
/// integers; omitted products are zero.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

/// {"objects", "arrows": [{"label", "source", "target"}], "compose":
///  [[g, h, g o h], ...], "identities", "inverse"}; objects and arrows are
/// referenced by index.
Json groupoid_to_json(const GroupoidSpec& g);
GroupoidSpec groupoid_from_json(const Json& j);

bool is_groupoid_json(const Json& j);

Json to_json(const HomologyReport& r);

inline constexpr std::string_view kReportSchema = "hochlab/1";

}  // namespace hochlab
