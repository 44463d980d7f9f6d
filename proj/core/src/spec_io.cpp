#include "hochlab/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "hochlab/errors.hpp"
#include "hochlab/groupoid.hpp"
#include "hochlab/rational.hpp"

namespace hochlab {

namespace {

[[noreturn]] void schema_error(const std::string& what, const std::string& where) {
  throw Error(ErrorKind::ParseError, what, where);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error("expected an object", where);
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field \"") + key + "\"", where);
  return *it;
}

std::uint64_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) schema_error("expected a nonnegative integer", where);
  return j.get<std::uint64_t>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      schema_error("bad rational \"" + j.get<std::string>() + "\"", where);
    }
  }
  schema_error("expected a rational (string \"p/q\" or integer)", where);
}

SparseVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error("expected [[k, coefficient], ...]", where);
  SparseVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) schema_error("expected [k, coefficient]", at);
    v.push_back(Entry{static_cast<std::uint32_t>(as_index(j[i][0], at + "/0")), as_rational(j[i][1], at + "/1")});
  }
  canonicalize(v);
  return v;
}

Json vector_to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(Json::array({e.index, to_string(e.value)}));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw ParseError(msg, line, column);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open input file", path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json algebra_to_json(const Algebra& a) {
  const AlgebraSpec s = a.to_spec();
  Json j;
  j["dim"] = s.dim;
  j["label"] = s.label;
  j["labels"] = s.basis_labels;
  Json mult = Json::array();
  for (const auto& p : s.mult) mult.push_back(Json::array({p.left, p.right, vector_to_json(p.value)}));
  j["mult"] = std::move(mult);
  j["unit"] = s.unit ? vector_to_json(*s.unit) : Json(nullptr);
  j["grading"] = s.grading ? Json(*s.grading) : Json(nullptr);
  j["degree_cap"] = s.degree_cap ? Json(*s.degree_cap) : Json(nullptr);
  if (s.graded_truncated) j["truncated"] = true;
  return j;
}

Algebra algebra_from_json(const Json& j) {
  AlgebraSpec s;
  s.dim = as_index(field(j, "dim", ""), "/dim");
  if (s.dim == 0 || s.dim > 4096) schema_error("dim must be between 1 and 4096", "/dim");
  s.label = j.value("label", std::string("algebra"));
  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != s.dim) schema_error("labels must list dim strings", "/labels");
    for (const auto& l : *it) {
      if (!l.is_string()) schema_error("labels must be strings", "/labels");
      s.basis_labels.push_back(l.get<std::string>());
    }
  }
  const Json& mult = field(j, "mult", "");
  if (!mult.is_array()) schema_error("mult must be an array", "/mult");
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const std::string at = "/mult/" + std::to_string(i);
    if (!mult[i].is_array() || mult[i].size() != 3) schema_error("expected [i, j, [[k, coefficient], ...]]", at);
    s.mult.push_back({static_cast<BasisIndex>(as_index(mult[i][0], at + "/0")),
                      static_cast<BasisIndex>(as_index(mult[i][1], at + "/1")), vector_from_json(mult[i][2], at + "/2")});
  }
  if (auto it = j.find("unit"); it != j.end() && !it->is_null()) s.unit = vector_from_json(*it, "/unit");
  if (auto it = j.find("grading"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) schema_error("grading must be an array of integers", "/grading");
    std::vector<int> g;
    for (const auto& d : *it) {
      if (!d.is_number_integer()) schema_error("grading must be an array of integers", "/grading");
      g.push_back(d.get<int>());
    }
    s.grading = std::move(g);
  }
  if (auto it = j.find("degree_cap"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) schema_error("degree_cap must be an integer", "/degree_cap");
    s.degree_cap = it->get<int>();
  }
  if (auto it = j.find("truncated"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean()) schema_error("truncated must be a boolean", "/truncated");
    s.graded_truncated = it->get<bool>();
  }
  return build_algebra(std::move(s));
}

Json groupoid_to_json(const GroupoidSpec& g) {
  Json j;
  j["name"] = g.name;
  j["objects"] = g.objects;
  Json arrows = Json::array();
  for (const auto& a : g.arrows) arrows.push_back({{"label", a.label}, {"source", a.source}, {"target", a.target}});
  j["arrows"] = std::move(arrows);
  Json compose = Json::array();
  for (std::size_t a = 0; a < g.compose.size(); ++a) {
    for (std::size_t b = 0; b < g.compose[a].size(); ++b) {
      if (g.compose[a][b] >= 0) compose.push_back(Json::array({a, b, g.compose[a][b]}));
    }
  }
  j["compose"] = std::move(compose);
  j["identities"] = g.identities;
  j["inverse"] = g.inverse;
  return j;
}

GroupoidSpec groupoid_from_json(const Json& j) {
  const Json& objects = field(j, "objects", "");
  if (!objects.is_array() || objects.empty()) schema_error("objects must be a nonempty array", "/objects");
  std::vector<std::string> obj;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].is_string()) {
      obj.push_back(objects[i].get<std::string>());
    } else {
      schema_error("object labels must be strings", "/objects/" + std::to_string(i));
    }
  }
  const Json& arrows = field(j, "arrows", "");
  if (!arrows.is_array()) schema_error("arrows must be an array", "/arrows");
  std::vector<GroupoidSpec::Arrow> arr;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string at = "/arrows/" + std::to_string(i);
    const auto s = as_index(field(arrows[i], "source", at), at + "/source");
    const auto t = as_index(field(arrows[i], "target", at), at + "/target");
    if (s >= obj.size() || t >= obj.size()) schema_error("arrow endpoint out of range", at);
    std::string label = arrows[i].value("label", "a" + std::to_string(i));
    arr.push_back({std::move(label), static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
  }
  auto index_list = [&](const char* key) {
    const Json& v = field(j, key, "");
    if (!v.is_array()) schema_error("expected an array of arrow indices", std::string("/") + key);
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto x = as_index(v[i], std::string("/") + key + "/" + std::to_string(i));
      if (x >= arr.size()) schema_error("arrow index out of range", std::string("/") + key + "/" + std::to_string(i));
      out.push_back(static_cast<std::uint32_t>(x));
    }
    return out;
  };
  const Json& compose = field(j, "compose", "");
  if (!compose.is_array()) schema_error("compose must be an array of triples", "/compose");
  std::vector<std::array<std::uint32_t, 3>> triples;
  for (std::size_t i = 0; i < compose.size(); ++i) {
    const std::string at = "/compose/" + std::to_string(i);
    if (!compose[i].is_array() || compose[i].size() != 3) schema_error("expected [g, h, g o h]", at);
    std::array<std::uint32_t, 3> t{};
    for (std::size_t c = 0; c < 3; ++c) {
      const auto x = as_index(compose[i][c], at + "/" + std::to_string(c));
      if (x >= arr.size()) schema_error("arrow index out of range", at);
      t[c] = static_cast<std::uint32_t>(x);
    }
    triples.push_back(t);
  }
  return make_groupoid(j.value("name", std::string("groupoid")), std::move(obj), std::move(arr), triples,
                       index_list("identities"), index_list("inverse"));
}

bool is_groupoid_json(const Json& j) { return j.is_object() && j.contains("objects"); }

Json to_json(const HomologyReport& r) {
  Json j;
  j["algebra"] = r.algebra;
  j["theory"] = r.theory;
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"dim_chains", d.dim_chains},
                       {"dim_kernel", d.dim_kernel},
                       {"rank_incoming", d.rank_incoming},
                       {"betti", d.betti},
                       {"provisional", d.provisional}});
  }
  j["degrees"] = std::move(degrees);
  j["betti"] = r.betti();
  j["provisional_top"] = r.provisional_top();
  j["graded_piece"] = r.graded_piece ? Json(*r.graded_piece) : Json(nullptr);
  return j;
}

}  // namespace hochlab
