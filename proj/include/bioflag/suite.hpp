#pragma once

#include <string>
#include <vector>

#include "bioflag/report.hpp"

namespace bioflag {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  /// Zero when the criterion carries no time limit.
  double limit_seconds = 0;
  std::string detail;
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion; a time-limit overrun counts as a failure.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite();

/// One check per criterion, timings under data.criteria.
EnumReport suite_report(const std::vector<CriterionResult>& results);

}  // namespace bioflag
