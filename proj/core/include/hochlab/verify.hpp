#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hochlab/hochschild.hpp"
#include "hochlab/spec_io.hpp"

namespace hochlab {

enum class Profile { Quick, Full };

const char* to_string(Profile p);

struct Check {
  std::string name;
  Json expected;
  Json computed;
  bool passed = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> notes;  // reported, not asserted
  double wall_ms = 0;
  bool passed() const;
};

struct SuiteReport {
  Profile profile = Profile::Quick;
  std::vector<CriterionResult> criteria;
  double wall_ms = 0;
  bool passed() const;
};

/// Number of acceptance criteria.
inline constexpr int kCriteria = 13;

/// Runs one criterion (1..kCriteria). Failures are data; only programming
/// errors propagate as exceptions.
CriterionResult run_criterion(int id, Profile profile, const ComputeOptions& options = {});

SuiteReport run_suite(Profile profile, const ComputeOptions& options = {},
                      const std::function<void(const CriterionResult&)>& on_result = {});

/// Deterministic part of the report; timings go under "run_stats" only when
/// requested.
Json to_json(const SuiteReport& r, bool with_run_stats = true);

/// Removes "run_stats" members recursively.
Json strip_run_stats(Json j);

}  // namespace hochlab
