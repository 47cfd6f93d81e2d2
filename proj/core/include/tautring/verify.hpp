#pragma once

#include <string>
#include <vector>

namespace tautring {

struct VerifyOptions {
  int jobs = 1;
  bool corrupt = false;   // fault injection: corrupt every built presentation
  std::string cache_dir;  // empty disables the slice cache
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double ms = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::vector<CriterionResult> cases;
  bool all_pass() const;
  std::string to_json() const;
};

// Registered suite names ("all" runs every acceptance criterion; the rest
// select single criteria).
std::vector<std::string> suite_names();

// Runs one acceptance criterion (1..10); never throws, failures are reported
// in the result.
CriterionResult run_criterion(int index, const VerifyOptions& opts);

// Runs a named suite; throws std::invalid_argument for an unknown name.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace tautring
