#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bioflag {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Raised before an enumeration whose estimated size exceeds the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate, std::uint64_t budget)
      : std::runtime_error(what + ": estimated " + std::to_string(estimate) +
                           " states exceeds budget " + std::to_string(budget)),
        estimate_(estimate) {}

  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

inline void require_budget(const std::string& what, double estimate, std::uint64_t budget) {
  if (estimate > static_cast<double>(budget)) throw BudgetExceeded(what, estimate, budget);
}

}  // namespace bioflag
