#pragma once

#include <map>
#include <string>
#include <vector>

namespace torsionlab::cli {

// How the measured value is compared with the tolerance.
enum class Comparison { AtMost, AtLeast };

struct CheckResult {
  std::string id;
  std::string suite;
  std::string description;
  Comparison comparison = Comparison::AtMost;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

using Tolerances = std::map<std::string, double>;

// specfun, spectra, engine, torsion; "all" runs every suite.
const std::vector<std::string>& suite_names();
bool is_check_id(const std::string& id);

// Checks run concurrently; results are ordered by check id. Throws DomainError for an unknown suite.
SuiteResult run_suite(const std::string& suite, const Tolerances& overrides = {});

}  // namespace torsionlab::cli
