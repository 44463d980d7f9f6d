#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hochlab/algebra.hpp"
#include "hochlab/groupoid.hpp"

namespace hochlab {

/// A resolved input: an algebra, plus the groupoid it came from if any.
struct Input {
  std::string name;
  Algebra algebra;
  std::optional<GroupoidSpec> groupoid;
};

/// Builtin names:
///   Q | zero[:d] | points:r | jet:n:m | poly:n[:D] | group:{Zn,S3}
///   matrix:r:<inner> | unital:<inner> | product:<a>+<b>
///   groupoid:{swap,z2point,two-orbit}
/// product splits at the last '+', so product:product:Q+Q+Q nests to the left.
/// Throws ParseError (column of the offending token) on a malformed name.
Input resolve_builtin(std::string_view name);

/// Builtin name or path to a JSON algebra/groupoid spec.
Input resolve_input(const std::string& name_or_path);

GroupoidSpec swap_groupoid();       // Z2 acting on {a, b} by exchange
GroupoidSpec z2_point_groupoid();   // Z2 acting trivially on {a}
GroupoidSpec two_orbit_groupoid();  // Z2 on {a, b, c} swapping a, b and fixing c

/// The unital builtins the verification suite quantifies over.
std::vector<std::string> unital_builtin_names();

}  // namespace hochlab
