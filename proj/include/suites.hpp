#pragma once

#include <string>
#include <vector>

#include "fincat.hpp"
#include "sweep.hpp"

// Suite orchestration for the CLI: named check bundles over the built-in
// corpus, with deterministic, order-normalized reports.

namespace harness {

struct SuiteConfig {
  std::vector<std::string> suites;  // empty = none, "all" expands
  int n_max = 3;
  int len_max = 2;
  int entry_max = 2;
  long budget = 2'000'000;
  unsigned seed = 42;
  std::string monoid;           // restrict monoid-indexed suites to one corpus entry
  std::string format = "text";  // or "json"
  std::string out;              // output path, empty = stdout
  bool parallel = true;
  bool timings = false;  // include wall times in the emitted report
};

struct CheckRecord {
  std::string check;    // stable id
  std::string anchor;   // the mathematical claim verified, or "plumbing"
  std::string params;
  std::string status;   // "pass", "fail", "budget"
  std::string witness;  // first counterexample, empty on pass
  double ms = 0.0;
};

struct RunReport {
  std::vector<CheckRecord> records;
  bool all_passed() const;
};

std::vector<std::string> suite_names();
RunReport run_suite(const SuiteConfig& config);
std::string render(const RunReport& report, const SuiteConfig& config);

}  // namespace harness
