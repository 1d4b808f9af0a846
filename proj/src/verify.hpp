#pragma once

#include <string>
#include <vector>

namespace qchrom {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool conjecture = false; // failure would be a conjecture counterexample, not a bug
  std::string witness;     // reproduction data on failure, notes otherwise
  long long elapsed_ms = 0;
};

struct SuiteReport {
  std::string suite;
  int max_n = 0;
  unsigned seed = 0;
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;

  bool passed() const;
  bool only_conjecture_failures() const;
  std::string to_text() const;
  std::string to_json_string() const;
};

struct VerifyOptions {
  int max_n = 0;       // 0 = suite default
  int workers = 0;     // 0 = QCHROM_WORKERS or 1
  unsigned seed = 12345;
  std::string filter;  // run only checks whose name contains this substring
  bool big_biword = false; // opt-in full n=6 bi-word sweep
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

} // namespace qchrom
