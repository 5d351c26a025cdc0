#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diaglab/distinguishability.hpp"
#include "diaglab/graph.hpp"

namespace diaglab {

enum class Quantity { KappaG, KappaBarG, TG, TBarG, TC, UpperBoundTG };

std::string quantity_name(Quantity q);

struct FormulaParams {
  int n = 0;
  std::optional<int> k;
  std::optional<int> g;
};

/// One closed-form result: an evaluator plus the exact validity range it was
/// stated for. Evaluation outside the range is an error, never an
/// extrapolation. `notes` flags known range caveats.
struct FormulaEntry {
  std::string id;
  Family family = Family::Custom;
  Quantity quantity = Quantity::KappaG;
  std::optional<DiagnosticModel> diagnostic;  // nullopt: holds for both models
  std::string statement;
  std::string range_text;
  std::string notes;
  bool interval = false;
  std::function<bool(const FormulaParams&)> valid;
  std::function<long(const FormulaParams&)> eval;
  std::function<std::pair<long, long>(const FormulaParams&)> eval_interval;
};

const std::vector<FormulaEntry>& formula_catalog();
const FormulaEntry& formula_entry(const std::string& id);

/// Exact integer value; throws RangeError outside the entry's range and
/// InvalidInput for interval entries (use evaluate_formula_interval).
long evaluate_formula(const std::string& id, int n, std::optional<int> k = std::nullopt,
                      std::optional<int> g = std::nullopt);

std::pair<long, long> evaluate_formula_interval(const std::string& id, int n,
                                                std::optional<int> k = std::nullopt,
                                                std::optional<int> g = std::nullopt);

struct CrossCheckReport {
  std::string id;
  FormulaParams params;
  long formula_value = 0;
  long oracle_value = 0;
  bool pass = false;
  std::string detail;
};

/// Compare a formula against an independently computed value. Mismatches are
/// reported, never silently passed.
CrossCheckReport cross_check(const std::string& id, const FormulaParams& params,
                             long oracle_value);

/// The extended piecewise hypercube connectivity must agree with the basic
/// closed form on the overlap g in [0, n-4]; returns one report per (n, g).
std::vector<CrossCheckReport> hypercube_extended_overlap_reports(int n_min, int n_max);

}  // namespace diaglab
