#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diaglab {

enum class Suite { Formulas, Relations, Constructions, Oracles };

std::string suite_name(Suite s);
Suite suite_from_name(std::string_view name);

struct CheckResult {
  std::string name;
  Suite suite = Suite::Formulas;
  int criterion = 0;  // acceptance criterion number, 0 for supplementary checks
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 42;  // drives every randomized check
  int workers = 1;
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options);
std::vector<CheckResult> run_all_suites(const VerifyOptions& options);

/// The numbered acceptance checks only (criterion > 0), ordered by criterion.
std::vector<CheckResult> run_acceptance(const VerifyOptions& options);

}  // namespace diaglab
