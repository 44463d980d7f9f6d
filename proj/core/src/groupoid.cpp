#include "hochlab/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "hochlab/errors.hpp"

namespace hochlab {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

std::uint32_t validate_group(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 0) throw ValidationError(ErrorKind::NotAGroup, "empty group");
  if (g.table.size() != n) throw ValidationError(ErrorKind::NotAGroup, "table has wrong number of rows");
  for (std::size_t a = 0; a < n; ++a) {
    if (g.table[a].size() != n) throw ValidationError(ErrorKind::NotAGroup, "ragged table row", idx(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table[a][b] >= n) {
        throw ValidationError(ErrorKind::NotAGroup, "product outside the group", "(" + idx(a) + "," + idx(b) + ")");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) {
          throw ValidationError(ErrorKind::NotAGroup, "table is not associative",
                                "(" + idx(a) + "," + idx(b) + "," + idx(c) + ")");
        }
      }
    }
  }
  std::optional<std::uint32_t> identity;
  for (std::uint32_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.table[e][a] == a && g.table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw ValidationError(ErrorKind::NotAGroup, "no identity element", g.name);
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) {
      has_inverse = g.table[a][b] == *identity && g.table[b][a] == *identity;
    }
    if (!has_inverse) throw ValidationError(ErrorKind::NotAGroup, "element without inverse", idx(a));
  }
  return *identity;
}

std::vector<std::uint32_t> group_inverses(const GroupTable& g) {
  const std::uint32_t e = validate_group(g);
  std::vector<std::uint32_t> inv(g.order());
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    for (std::uint32_t b = 0; b < g.order(); ++b) {
      if (g.table[a][b] == e) inv[a] = b;
    }
  }
  return inv;
}

GroupTable cyclic_group(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group of order 0");
  GroupTable g;
  g.name = "Z" + std::to_string(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    g.labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  g.table.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  }
  return g;
}

GroupTable symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  GroupTable g;
  g.name = "S3";
  for (const auto& q : perms) {
    g.labels.push_back("[" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]) + "]");
  }
  g.table.assign(perms.size(), std::vector<std::uint32_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      // (ab)(i) = a(b(i))
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.table[a][b] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

void validate_groupoid(const GroupoidSpec& g) {
  const std::size_t n_obj = g.objects.size();
  const std::size_t n_arr = g.arrows.size();
  auto fail = [](const std::string& what, const std::string& witness) {
    throw ValidationError(ErrorKind::NotAGroupoid, what, witness);
  };
  if (n_obj == 0) fail("groupoid without objects", g.name);
  for (std::size_t a = 0; a < n_arr; ++a) {
    if (g.arrows[a].source >= n_obj || g.arrows[a].target >= n_obj) fail("arrow endpoint out of range", idx(a));
  }
  if (g.compose.size() != n_arr) fail("composition table has wrong size", g.name);
  for (std::size_t a = 0; a < n_arr; ++a) {
    if (g.compose[a].size() != n_arr) fail("ragged composition table", idx(a));
    for (std::size_t b = 0; b < n_arr; ++b) {
      const bool composable = g.arrows[a].source == g.arrows[b].target;
      const std::int32_t c = g.compose[a][b];
      const std::string w = "(" + idx(a) + "," + idx(b) + ")";
      if (composable != (c >= 0)) fail("composition defined iff source(g) = target(h) violated", w);
      if (c >= 0) {
        if (static_cast<std::size_t>(c) >= n_arr) fail("composite out of range", w);
        if (g.arrows[c].source != g.arrows[b].source || g.arrows[c].target != g.arrows[a].target) {
          fail("composite has wrong endpoints", w);
        }
      }
    }
  }
  for (std::size_t a = 0; a < n_arr; ++a) {
    for (std::size_t b = 0; b < n_arr; ++b) {
      if (g.compose[a][b] < 0) continue;
      for (std::size_t c = 0; c < n_arr; ++c) {
        if (g.compose[b][c] < 0) continue;
        if (g.compose[g.compose[a][b]][c] != g.compose[a][g.compose[b][c]]) {
          fail("composition is not associative", "(" + idx(a) + "," + idx(b) + "," + idx(c) + ")");
        }
      }
    }
  }
  if (g.identities.size() != n_obj) fail("identity list has wrong size", g.name);
  for (std::size_t x = 0; x < n_obj; ++x) {
    const auto id = g.identities[x];
    if (id >= n_arr || g.arrows[id].source != x || g.arrows[id].target != x) fail("identity is not a loop at its object", idx(x));
    for (std::size_t a = 0; a < n_arr; ++a) {
      if (g.arrows[a].source == x && g.compose[a][id] != static_cast<std::int32_t>(a)) fail("right identity law", idx(a));
      if (g.arrows[a].target == x && g.compose[id][a] != static_cast<std::int32_t>(a)) fail("left identity law", idx(a));
    }
  }
  if (g.inverse.size() != n_arr) fail("inverse list has wrong size", g.name);
  for (std::size_t a = 0; a < n_arr; ++a) {
    const auto inv = g.inverse[a];
    if (inv >= n_arr || g.arrows[inv].source != g.arrows[a].target || g.arrows[inv].target != g.arrows[a].source) {
      fail("inverse has wrong endpoints", idx(a));
    }
    if (g.compose[a][inv] != static_cast<std::int32_t>(g.identities[g.arrows[a].target]) ||
        g.compose[inv][a] != static_cast<std::int32_t>(g.identities[g.arrows[a].source])) {
      fail("arrow is not inverted by its inverse", idx(a));
    }
  }
}

GroupoidSpec make_groupoid(std::string name, std::vector<std::string> objects,
                           std::vector<GroupoidSpec::Arrow> arrows,
                           const std::vector<std::array<std::uint32_t, 3>>& compose_triples,
                           std::vector<std::uint32_t> identities, std::vector<std::uint32_t> inverse) {
  GroupoidSpec g;
  g.name = std::move(name);
  g.objects = std::move(objects);
  g.arrows = std::move(arrows);
  const std::size_t n = g.arrows.size();
  g.compose.assign(n, std::vector<std::int32_t>(n, -1));
  for (const auto& [a, b, c] : compose_triples) {
    if (a >= n || b >= n || c >= n) {
      throw ValidationError(ErrorKind::NotAGroupoid, "composition triple out of range",
                            "(" + idx(a) + "," + idx(b) + "," + idx(c) + ")");
    }
    if (g.compose[a][b] >= 0 && g.compose[a][b] != static_cast<std::int32_t>(c)) {
      throw ValidationError(ErrorKind::NotAGroupoid, "conflicting composition triples",
                            "(" + idx(a) + "," + idx(b) + ")");
    }
    g.compose[a][b] = static_cast<std::int32_t>(c);
  }
  g.identities = std::move(identities);
  g.inverse = std::move(inverse);
  validate_groupoid(g);
  return g;
}

GroupoidSpec action_groupoid(const GroupTable& group, const std::vector<std::string>& points,
                             const std::vector<std::vector<std::uint32_t>>& action) {
  const std::uint32_t e = validate_group(group);
  const auto inv = group_inverses(group);
  const std::size_t n = group.order();
  const std::size_t m = points.size();
  if (action.size() != n) throw ValidationError(ErrorKind::NotAnAction, "action table needs one row per element");
  for (std::size_t g = 0; g < n; ++g) {
    if (action[g].size() != m) throw ValidationError(ErrorKind::NotAnAction, "ragged action row", idx(g));
    for (std::size_t x = 0; x < m; ++x) {
      if (action[g][x] >= m) throw ValidationError(ErrorKind::NotAnAction, "g.x outside the set", "(" + idx(g) + "," + idx(x) + ")");
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    if (action[e][x] != x) throw ValidationError(ErrorKind::NotAnAction, "identity does not act trivially", points[x]);
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t x = 0; x < m; ++x) {
        if (action[group.table[g][h]][x] != action[g][action[h][x]]) {
          throw ValidationError(ErrorKind::NotAnAction, "(gh).x != g.(h.x)",
                                "(" + group.labels[g] + "," + group.labels[h] + "," + points[x] + ")");
        }
      }
    }
  }

  auto arrow_index = [m](std::size_t g, std::size_t x) { return static_cast<std::uint32_t>(g * m + x); };
  GroupoidSpec out;
  out.name = group.name + " acting on {" + [&] {
    std::string s;
    for (std::size_t x = 0; x < m; ++x) s += (x ? "," : "") + points[x];
    return s;
  }() + "}";
  out.objects = points;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < m; ++x) {
      out.arrows.push_back({"(" + group.labels[g] + "," + points[x] + ")", static_cast<std::uint32_t>(x), action[g][x]});
    }
  }
  const std::size_t arrows = n * m;
  out.compose.assign(arrows, std::vector<std::int32_t>(arrows, -1));
  // (g, h.x) o (h, x) = (gh, x)
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t g = 0; g < n; ++g) {
        out.compose[arrow_index(g, action[h][x])][arrow_index(h, x)] =
            static_cast<std::int32_t>(arrow_index(group.table[g][h], x));
      }
    }
  }
  for (std::size_t x = 0; x < m; ++x) out.identities.push_back(arrow_index(e, x));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < m; ++x) out.inverse.push_back(arrow_index(inv[g], action[g][x]));
  }
  validate_groupoid(out);
  return out;
}

GroupoidSpec disjoint_union(const GroupoidSpec& a, const GroupoidSpec& b) {
  validate_groupoid(a);
  validate_groupoid(b);
  const auto oa = static_cast<std::uint32_t>(a.objects.size());
  const auto na = static_cast<std::uint32_t>(a.arrows.size());
  GroupoidSpec out;
  out.name = a.name + " + " + b.name;
  out.objects = a.objects;
  out.objects.insert(out.objects.end(), b.objects.begin(), b.objects.end());
  out.arrows = a.arrows;
  for (auto arr : b.arrows) {
    arr.source += oa;
    arr.target += oa;
    out.arrows.push_back(arr);
  }
  const std::size_t n = out.arrows.size();
  out.compose.assign(n, std::vector<std::int32_t>(n, -1));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) out.compose[i][j] = a.compose[i][j];
  }
  for (std::size_t i = 0; i < b.arrows.size(); ++i) {
    for (std::size_t j = 0; j < b.arrows.size(); ++j) {
      const auto c = b.compose[i][j];
      out.compose[na + i][na + j] = c < 0 ? -1 : c + static_cast<std::int32_t>(na);
    }
  }
  out.identities = a.identities;
  for (auto id : b.identities) out.identities.push_back(id + na);
  out.inverse = a.inverse;
  for (auto inv : b.inverse) out.inverse.push_back(inv + na);
  validate_groupoid(out);
  return out;
}

}  // namespace hochlab
