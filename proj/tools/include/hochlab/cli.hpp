#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hochlab/spec_io.hpp"
#include "hochlab/verify.hpp"

namespace hochlab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kResourceLimit = 3 };

struct JobSpec {
  std::string command;  // hh hc bar-check hkr localize orbits sbi lambda-compare wdr verify-all
  std::string input;    // builtin name or JSON path
  std::size_t max_degree = 4;
  std::optional<int> piece;
  bool oracle = false;
  std::string output;   // JSON report path, empty for none
  Profile profile = Profile::Quick;
  std::size_t max_dim = 200000;
};

const std::vector<std::string>& commands();

struct RunReport {
  int exit_code = kOk;
  Json json;          // schema hochlab/1; run_stats holds the timing fields
  std::string text;   // human-readable rendering
};

/// Validates, dispatches and renders. Never throws for input problems; they
/// become an error report with exit code 2 (or 3 for resource limits).
RunReport run(const JobSpec& job);

/// Command-line entry point.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hochlab::cli
