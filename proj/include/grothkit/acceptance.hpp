#pragma once

#include <functional>
#include <string>
#include <vector>

namespace grothkit {

struct AcceptanceOptions {
  /// Shrink every sweep to n <= 4 while keeping each criterion.
  bool quick = false;
  /// Add the S_7 sweep to the six-pattern criterion.
  bool extended = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  /// Wall-clock budget in seconds; 0 means none.
  double budget = 0.0;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// Runs every criterion in order, reporting each result as it finishes.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

/// One table line: "[PASS]  3  six-pattern theorem ...  (1.23 s)  detail".
std::string format_result(const CriterionResult& r);

}  // namespace grothkit
