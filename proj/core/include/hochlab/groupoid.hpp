#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hochlab {

/// Finite group by multiplication table: table[g][h] = gh.
struct GroupTable {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> table;

  std::size_t order() const noexcept { return labels.size(); }
};

/// Checks closure, associativity, identity and inverses. Throws ValidationError
/// (NotAGroup) with a witness. Returns the identity element.
std::uint32_t validate_group(const GroupTable& g);

std::vector<std::uint32_t> group_inverses(const GroupTable& g);

GroupTable cyclic_group(std::uint32_t n);
GroupTable symmetric_group_3();

/// Finite groupoid. compose[g][h] is the index of g o h, or -1 when
/// source(g) != target(h).
struct GroupoidSpec {
  struct Arrow {
    std::string label;
    std::uint32_t source;
    std::uint32_t target;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::int32_t>> compose;
  std::vector<std::uint32_t> identities;  // per object
  std::vector<std::uint32_t> inverse;     // per arrow
};

/// Category axioms plus invertibility. Throws ValidationError (NotAGroupoid).
void validate_groupoid(const GroupoidSpec& g);

/// Builds a groupoid from composition triples (g, h, g o h) given by arrow
/// index; every composable pair must be listed.
GroupoidSpec make_groupoid(std::string name, std::vector<std::string> objects,
                           std::vector<GroupoidSpec::Arrow> arrows,
                           const std::vector<std::array<std::uint32_t, 3>>& compose_triples,
                           std::vector<std::uint32_t> identities, std::vector<std::uint32_t> inverse);

/// action[g][x] = g.x. Arrows are (g, x) : x -> g.x, enumerated g-major.
/// Throws ValidationError (NotAnAction) if e.x != x or (gh).x != g.(h.x).
GroupoidSpec action_groupoid(const GroupTable& group, const std::vector<std::string>& points,
                             const std::vector<std::vector<std::uint32_t>>& action);

/// Disjoint union; objects and arrows of b follow those of a.
GroupoidSpec disjoint_union(const GroupoidSpec& a, const GroupoidSpec& b);

}  // namespace hochlab
