#include "hochlab/builtins.hpp"

#include <charconv>
#include <filesystem>

#include "hochlab/constructions.hpp"
#include "hochlab/cyclic.hpp"
#include "hochlab/errors.hpp"
#include "hochlab/spec_io.hpp"

namespace hochlab {

namespace {

[[noreturn]] void bad_name(std::string_view full, std::size_t at, const std::string& msg) {
  throw ParseError(msg + " in builtin name \"" + std::string(full) + "\"", 1, at + 1);
}

int parse_int(std::string_view full, std::string_view token, std::size_t at, int lo, int hi) {
  int v = 0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || p != token.data() + token.size()) bad_name(full, at, "expected an integer");
  if (v < lo || v > hi) {
    bad_name(full, at, "integer " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

// Splits off the next ':'-separated token starting at pos.
std::string_view next_token(std::string_view s, std::size_t& pos) {
  const std::size_t end = std::min(s.find(':', pos), s.size());
  std::string_view t = s.substr(pos, end - pos);
  pos = end == s.size() ? end : end + 1;
  return t;
}

Input resolve(std::string_view full, std::size_t offset) {
  std::string_view s = full.substr(offset);
  auto groupoid_input = [&](GroupoidSpec g) {
    Algebra a = groupoid_convolution_algebra(g);
    return Input{std::string(s), std::move(a), std::move(g)};
  };
  auto plain = [&](Algebra a) { return Input{std::string(s), std::move(a), std::nullopt}; };

  std::size_t pos = 0;
  const std::string_view head = next_token(s, pos);
  const bool more = pos < s.size();
  if (head == "Q" && !more) return plain(field_algebra());
  if (head == "zero") {
    if (!more) return plain(zero_algebra(1));
    return plain(zero_algebra(static_cast<std::size_t>(parse_int(full, s.substr(pos), offset + pos, 1, 64))));
  }
  if (head == "points") return plain(points_algebra(static_cast<std::size_t>(parse_int(full, s.substr(pos), offset + pos, 1, 16))));
  if (head == "jet") {
    const std::size_t at_n = pos;
    const int n = parse_int(full, next_token(s, pos), offset + at_n, 1, 8);
    const int m = parse_int(full, s.substr(pos), offset + pos, 0, 16);
    return plain(jet_algebra(n, m));
  }
  if (head == "poly") {
    const std::size_t at_n = pos;
    const int n = parse_int(full, next_token(s, pos), offset + at_n, 1, 8);
    const int cap = pos < s.size() ? parse_int(full, s.substr(pos), offset + pos, 0, 16) : 4;
    return plain(polynomial_algebra_graded(n, cap));
  }
  if (head == "group") {
    const std::string_view g = s.substr(pos);
    if (g == "S3") return plain(group_algebra(symmetric_group_3()));
    if (g.size() >= 2 && g[0] == 'Z') {
      return plain(group_algebra(cyclic_group(static_cast<std::uint32_t>(parse_int(full, g.substr(1), offset + pos + 1, 1, 64)))));
    }
    bad_name(full, offset + pos, "unknown group (Zn or S3)");
  }
  if (head == "matrix") {
    const std::size_t at_r = pos;
    const int r = parse_int(full, next_token(s, pos), offset + at_r, 1, 8);
    if (pos >= s.size()) bad_name(full, offset + pos, "matrix needs an inner algebra");
    Input inner = resolve(full, offset + pos);
    return plain(matrix_algebra(inner.algebra, r));
  }
  if (head == "unital") {
    if (!more) bad_name(full, offset + pos, "unital needs an inner algebra");
    return plain(unitalization(resolve(full, offset + pos).algebra).algebra);
  }
  if (head == "product") {
    const std::string_view rest = s.substr(pos);
    const std::size_t plus = rest.rfind('+');
    if (plus == std::string_view::npos || plus == 0 || plus + 1 == rest.size()) {
      bad_name(full, offset + pos, "product needs <a>+<b>");
    }
    // Resolve the two halves as stand-alone names; report columns in the full name.
    const std::string left(rest.substr(0, plus));
    const std::string right(rest.substr(plus + 1));
    try {
      return plain(product_algebra(resolve_builtin(left).algebra, resolve_builtin(right).algebra));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), 1, offset + pos + 1);
    }
  }
  if (head == "groupoid") {
    const std::string_view g = s.substr(pos);
    if (g == "swap") return groupoid_input(swap_groupoid());
    if (g == "z2point") return groupoid_input(z2_point_groupoid());
    if (g == "two-orbit") return groupoid_input(two_orbit_groupoid());
    bad_name(full, offset + pos, "unknown groupoid (swap, z2point, two-orbit)");
  }
  bad_name(full, offset, "unknown builtin \"" + std::string(head) + "\"");
}

}  // namespace

Input resolve_builtin(std::string_view name) {
  if (name.empty()) bad_name(name, 0, "empty name");
  Input in = resolve(name, 0);
  in.name = std::string(name);
  return in;
}

Input resolve_input(const std::string& name_or_path) {
  const bool looks_like_file = name_or_path.find(".json") != std::string::npos ||
                               name_or_path.find('/') != std::string::npos;
  if (!looks_like_file) return resolve_builtin(name_or_path);
  const Json j = read_json_file(name_or_path);
  const std::string stem = std::filesystem::path(name_or_path).stem().string();
  if (is_groupoid_json(j)) {
    GroupoidSpec g = groupoid_from_json(j);
    if (!j.contains("name")) g.name = stem;
    Algebra a = groupoid_convolution_algebra(g);
    return Input{name_or_path, std::move(a), std::move(g)};
  }
  Json copy = j;
  if (!copy.contains("label")) copy["label"] = stem;
  return Input{name_or_path, algebra_from_json(copy), std::nullopt};
}

GroupoidSpec swap_groupoid() {
  GroupoidSpec g = action_groupoid(cyclic_group(2), {"a", "b"}, {{0, 1}, {1, 0}});
  g.name = "swap";
  return g;
}

GroupoidSpec z2_point_groupoid() {
  GroupoidSpec g = action_groupoid(cyclic_group(2), {"a"}, {{0}, {0}});
  g.name = "z2point";
  return g;
}

GroupoidSpec two_orbit_groupoid() {
  GroupoidSpec g = action_groupoid(cyclic_group(2), {"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}});
  g.name = "two-orbit";
  return g;
}

std::vector<std::string> unital_builtin_names() {
  return {"Q",           "jet:1:1",     "jet:1:2",         "jet:2:1",        "group:Z2",
          "group:Z3",    "group:S3",    "matrix:2:Q",      "product:Q+Q",    "product:jet:1:1+Q",
          "unital:zero", "groupoid:swap", "groupoid:two-orbit"};
}

}  // namespace hochlab
