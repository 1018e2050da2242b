#pragma once

// Named verification suites. Each check carries an id and, on failure, a
// witness that reproduces it.

#include <string>
#include <vector>

#include "schurlab/json_io.hpp"

namespace schurlab {

struct Check {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  Json parameters = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> notes;  // informational, never affects passed()
  double wall_seconds = 0;         // kept out of to_json()

  bool passed() const;
  void add(std::string id, bool ok, std::string detail = {});
  /// Checks sorted by id; no timing data, so output is reproducible.
  Json to_json() const;
};

struct SuiteOptions {
  int n = 3;
  int r = 3;
  int degree = 2;
  int window = 3;
};

/// gbasis, codet, zbas, idem-lemma, cellular, relations, psi, gl2,
/// sym-quotient, or all.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace schurlab
