#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hochlab/builtins.hpp"
#include "hochlab/constructions.hpp"
#include "hochlab/hochschild.hpp"
#include "hochlab/rank_cache.hpp"
#include "hochlab/spec_io.hpp"
#include "support.hpp"

using namespace hochlab;

namespace {

const std::filesystem::path kData = HOCHLAB_TEST_DATA_DIR;

std::size_t parse_column(std::string_view name) {
  try {
    resolve_builtin(name);
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    return e.column();
  }
  FAIL("expected a ParseError for " << name);
  return 0;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("algebra JSON round trip") {
  for (const auto& name : unital_builtin_names()) {
    CAPTURE(name);
    const auto a = resolve_builtin(name).algebra;
    const auto j = algebra_to_json(a);
    const auto b = algebra_from_json(parse_json(j.dump()));
    CHECK(algebra_to_json(b) == j);
    CHECK(b.dim() == a.dim());
  }
  const auto p = polynomial_algebra_graded(1, 3);
  const auto q = algebra_from_json(algebra_to_json(p));
  CHECK(q.is_graded_truncated());
  CHECK(q.degree_cap() == 3);
}

TEST_CASE("algebra files") {
  const auto dual = resolve_input((kData / "dual-numbers.json").string());
  CHECK(dual.algebra.dim() == 2);
  CHECK(dual.algebra.is_unital());
  CHECK(hh(dual.algebra, 3).exact_betti() == test::Betti{2, 1, 1});

  CHECK(test::error_kind([] { resolve_input((kData / "nonassoc.json").string()); }) == ErrorKind::NonAssociative);
  CHECK(test::witness_of([] { resolve_input((kData / "nonassoc.json").string()); }) == "(0,0,0)");

  try {
    resolve_input((kData / "bad-syntax.json").string());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(e.column() == 1);
  }
  CHECK(test::error_kind([] { resolve_input("/nonexistent/file.json"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("coefficients as strings or integers") {
  const auto j = parse_json(R"({"dim": 1, "mult": [[0, 0, [[0, 1]]]], "unit": [[0, "2/2"]]})");
  const auto a = algebra_from_json(j);
  CHECK(a.is_unital());
  CHECK(a.product(0, 0) == SparseVector{{0, Rational(1)}});
}

TEST_CASE("schema errors name the offending field") {
  auto kind_and_where = [](const char* text) {
    try {
      algebra_from_json(parse_json(text));
    } catch (const Error& e) {
      return std::pair{e.kind(), e.witness()};
    }
    return std::pair{ErrorKind::InvalidArgument, std::string("no error")};
  };
  CHECK(kind_and_where(R"({"mult": []})").first == ErrorKind::ParseError);
  const auto bad_coeff = kind_and_where(R"({"dim": 1, "mult": [[0, 0, [[0, "1/0"]]]]})");
  CHECK(bad_coeff.first == ErrorKind::ParseError);
  CHECK(bad_coeff.second == "/mult/0/2/0/1");
  CHECK(kind_and_where(R"({"dim": 1, "mult": [[0, -1, []]]})").second == "/mult/0/1");
  CHECK(kind_and_where(R"([1, 2])").first == ErrorKind::ParseError);
  try {
    parse_json("{\n  \"dim\": 1,\n  oops\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("groupoid JSON") {
  const auto in = resolve_input((kData / "swap-z2.json").string());
  REQUIRE(in.groupoid);
  CHECK(in.groupoid->objects == std::vector<std::string>{"p", "q"});
  CHECK(in.algebra.dim() == 4);
  for (const auto& g : {swap_groupoid(), z2_point_groupoid(), two_orbit_groupoid()}) {
    const auto j = groupoid_to_json(g);
    CHECK(is_groupoid_json(j));
    CHECK(groupoid_to_json(groupoid_from_json(j)) == j);
  }
  auto j = groupoid_to_json(swap_groupoid());
  j["compose"].erase(0);
  CHECK(!is_groupoid_json(algebra_to_json(field_algebra())));
  CHECK_THROWS_AS(groupoid_from_json(j), Error);
}

TEST_CASE("builtin names") {
  CHECK(resolve_builtin("Q").algebra.dim() == 1);
  CHECK(resolve_builtin("zero").algebra.dim() == 1);
  CHECK(resolve_builtin("zero:3").algebra.dim() == 3);
  CHECK(resolve_builtin("points:4").algebra.dim() == 4);
  CHECK(resolve_builtin("jet:2:2").algebra.dim() == 6);
  CHECK(resolve_builtin("poly:1").algebra.degree_cap() == 4);
  CHECK(resolve_builtin("poly:2:3").algebra.dim() == 10);
  CHECK(resolve_builtin("group:Z5").algebra.dim() == 5);
  CHECK(resolve_builtin("group:S3").algebra.dim() == 6);
  CHECK(resolve_builtin("matrix:2:group:Z2").algebra.dim() == 8);
  CHECK(resolve_builtin("unital:zero:2").algebra.dim() == 3);
  CHECK(resolve_builtin("product:product:Q+Q+Q").algebra.dim() == 3);
  CHECK(resolve_builtin("product:jet:1:1+matrix:2:Q").algebra.dim() == 6);
  const auto g = resolve_builtin("groupoid:two-orbit");
  REQUIRE(g.groupoid);
  CHECK(g.algebra.dim() == 6);
  CHECK(resolve_input("jet:1:1").algebra.dim() == 2);
}

TEST_CASE("malformed builtin names") {
  CHECK(parse_column("nope") == 1);
  CHECK(parse_column("jet:x:1") == 5);
  CHECK(parse_column("jet:1:") == 7);
  CHECK(parse_column("jet:1:99") == 7);
  CHECK(parse_column("group:Q8") == 7);
  CHECK(parse_column("matrix:2") == 9);
  CHECK(parse_column("product:Q") == 9);
  CHECK(parse_column("groupoid:circle") == 10);
  CHECK(parse_column("Q:1") == 1);
  CHECK(parse_column("") == 1);
}

TEST_CASE("rank cache") {
  const auto dir = fresh_dir("hochlab_cache_unit");
  const auto file = dir / "ranks.jsonl";
  const auto a = jet_algebra(1, 1);
  const auto key = RankCache::make_key(a, 2, std::nullopt, "hh_d");
  CHECK(key.size() == 64);
  CHECK(key == RankCache::make_key(a, 2, std::nullopt, "hh_d"));
  CHECK(key != RankCache::make_key(a, 3, std::nullopt, "hh_d"));
  CHECK(key != RankCache::make_key(a, 2, 1, "hh_d"));
  CHECK(key != RankCache::make_key(jet_algebra(1, 2), 2, std::nullopt, "hh_d"));
  CHECK(content_hash("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  {
    RankCache c(file);
    CHECK(!c.lookup(key));
    c.store(key, 4);
    c.store(key, 4);
    CHECK_THROWS_AS(c.store(key, 5), Error);
    CHECK(c.lookup(key) == 4u);
    CHECK(c.hits() == 1);
    CHECK(c.misses() == 1);
    c.flush();
  }
  CHECK(std::filesystem::exists(file));
  CHECK(!std::filesystem::exists(dir / "ranks.jsonl.tmp"));
  {
    RankCache c(file);
    CHECK(c.size() == 1);
    CHECK(c.lookup(key) == 4u);
  }
  {
    std::ofstream out(file, std::ios::app);
    out << "not json\n" << R"({"key": "k", "rank": 1, "engine": "0.0.0-other"})" << '\n';
  }
  CHECK(RankCache(file).size() == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache location from the environment") {
  const auto dir = fresh_dir("hochlab_cache_env");
  ::setenv("HOCHLAB_CACHE_DIR", dir.c_str(), 1);
  CHECK(RankCache::default_path() == dir / "ranks.jsonl");
  ::unsetenv("HOCHLAB_CACHE_DIR");
  CHECK(!RankCache::default_path());
  std::filesystem::remove_all(dir);
}
