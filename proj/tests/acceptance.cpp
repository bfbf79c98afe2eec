#include <cstdio>

#include "bioflag/suite.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= bioflag::kCriterionCount; ++id) {
    const auto r = bioflag::run_criterion(id);
    std::printf("%s criterion %d: %s (%.2f s) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d of %d criteria passed\n", bioflag::kCriterionCount - failed, bioflag::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
