#pragma once

#include <string>
#include <utility>
#include <vector>

namespace schubert::verify {

struct SuiteOptions {
  /// Largest n for the exhaustive sweeps that take one; 0 keeps the suite default.
  int exhaustive_n = 0;
  /// lemma34 only: A, D, E6, E7 or all.
  std::string family = "A";
};

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;
  std::vector<std::string> notes;

  bool pass() const { return failures == 0 && checks > 0; }
  void record(bool ok, const std::string& witness);
};

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace schubert::verify
