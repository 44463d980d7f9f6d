#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hochlab/cli.hpp"

using namespace hochlab;
namespace cli = hochlab::cli;

namespace {

const std::filesystem::path kData = HOCHLAB_TEST_DATA_DIR;

cli::RunReport run(std::string command, std::string input, std::size_t N = 3) {
  cli::JobSpec job;
  job.command = std::move(command);
  job.input = std::move(input);
  job.max_degree = N;
  return cli::run(job);
}

int run_main(std::vector<std::string> args, std::string& out, std::string& err) {
  args.insert(args.begin(), "hochlab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream o, e;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  err = e.str();
  return code;
}

}  // namespace

TEST_CASE("hh with oracles") {
  cli::JobSpec job;
  job.command = "hh";
  job.input = "jet:1:1";
  job.max_degree = 4;
  job.oracle = true;
  const auto r = cli::run(job);
  CHECK(r.exit_code == cli::kOk);
  const auto& j = r.json;
  CHECK(j["schema"] == "hochlab/1");
  CHECK(j["verified"] == true);
  CHECK(j["result"]["exact_betti"] == Json::array({2, 1, 1, 1}));
  CHECK(j["result"]["provisional_top"] == true);
  CHECK(j["result"]["oracle_match"] == true);
  CHECK(j["input_hash"].get<std::string>().size() == 64);
  CHECK(j.contains("run_stats"));
}

TEST_CASE("orbits of a groupoid file") {
  const auto r = run("orbits", (kData / "swap-z2.json").string());
  CHECK(r.exit_code == cli::kOk);
  const auto& res = r.json["result"];
  REQUIRE(res["orbits"].size() == 1);
  CHECK(res["orbits"][0]["isotropy_trivial"] == true);
  CHECK(res["morita_verdict"] == "A ≅ M_2(ℚ)");
  CHECK(res["match"] == true);
}

TEST_CASE("every command succeeds on a suitable input") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"hc", "Q"},          {"lambda-compare", "jet:1:1"}, {"bar-check", "unital:zero"}, {"hkr", "poly:2:3"},
      {"localize", "product:Q+Q"}, {"localize", "jet:1:1"}, {"sbi", "group:Z2"}, {"wdr", "poly:2:2"},
      {"orbits", "groupoid:two-orbit"},
  };
  for (const auto& [command, input] : cases) {
    CAPTURE(command);
    CAPTURE(input);
    const auto r = run(command, input);
    CHECK(r.exit_code == cli::kOk);
    CHECK(r.json["verified"] == true);
    CHECK(!r.text.empty());
  }
  CHECK(run("bar-check", "zero").json["result"]["h_unital"] == false);
}

TEST_CASE("input errors") {
  const auto nonassoc = run("hh", (kData / "nonassoc.json").string());
  CHECK(nonassoc.exit_code == cli::kInputError);
  CHECK(nonassoc.json["error"]["kind"] == "NonAssociative");
  CHECK(nonassoc.json["error"]["witness"] == "(0,0,0)");

  const auto syntax = run("hh", (kData / "bad-syntax.json").string());
  CHECK(syntax.exit_code == cli::kInputError);
  CHECK(syntax.json["error"]["line"] == 6);

  CHECK(run("hh", "poly:1").json["error"]["kind"] == "GradedPieceRequired");
  CHECK(run("hh", "jet:1:x").exit_code == cli::kInputError);
  CHECK(run("localize", "group:Z2").exit_code == cli::kInputError);
  CHECK(run("orbits", "Q").exit_code == cli::kInputError);
  CHECK(run("frobnicate", "Q").exit_code == cli::kInputError);
  CHECK(run("hh", "Q", 0).exit_code == cli::kInputError);
}

TEST_CASE("resource limit") {
  const auto r = run("hh", "group:S3", 7);
  CHECK(r.exit_code == cli::kResourceLimit);
  CHECK(r.json["error"]["kind"] == "ResourceLimit");
  CHECK(r.json["error"]["ceiling"] == 200000);
}

TEST_CASE("reports are deterministic apart from run statistics") {
  auto a = run("hc", "jet:1:2").json;
  auto b = run("hc", "jet:1:2").json;
  a.erase("run_stats");
  b.erase("run_stats");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("command line") {
  std::string out, err;
  CHECK(run_main({"hh", "--input", "Q", "--max-degree", "3"}, out, err) == cli::kOk);
  CHECK(out.find("exact: (1, 0, 0)") != std::string::npos);

  CHECK(run_main({"hh", "-i", "jet:1:1", "-N", "4", "--oracle", "--json"}, out, err) == cli::kOk);
  const auto j = parse_json(out);
  CHECK(j["result"]["oracle_match"] == true);

  const auto file = std::filesystem::temp_directory_path() / "hochlab_cli_report.json";
  std::filesystem::remove(file);
  CHECK(run_main({"sbi", "-i", "Q", "-N", "4", "-o", file.string()}, out, err) == cli::kOk);
  CHECK(read_json_file(file)["result"]["exact"] == true);
  std::filesystem::remove(file);

  CHECK(run_main({"hh", "-i", "group:S3", "-N", "7"}, out, err) == cli::kResourceLimit);
  CHECK(err.find("error:") != std::string::npos);
  CHECK(run_main({"hh", "--bogus"}, out, err) == cli::kInputError);
  CHECK(run_main({}, out, err) == cli::kInputError);
  CHECK(run_main({"verify-all", "--profile", "slow"}, out, err) == cli::kInputError);
  CHECK(run_main({"hh", "--help"}, out, err) == cli::kOk);
}
