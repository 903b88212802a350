// Acceptance suite: runs every documented verification criterion at its
// stated tolerance, prints one pass/fail line per criterion and exits
// nonzero if anything fails or overruns its time budget.

#include <cstdio>
#include <string>
#include <vector>

#include "eucmin/verify.hpp"

int main() {
  using eucmin::CheckResult;
  using eucmin::VerifyOptions;

  struct Criterion {
    int number;
    const char* id;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {1, "table_reproduction", 1.0}, {2, "hermite_consistency", 1.0},
      {3, "blichfeldt_scan", 2.0},    {4, "improvement_factor", 1.0},
      {5, "length_inequality", 30.0}, {6, "det_identity", 5.0},
      {7, "gaussian_minima", 5.0},    {8, "minkowski_product", 60.0},
      {9, "a_equals_s_comparison", 1.0},
  };

  VerifyOptions opts;  // full sample sizes: 1e5 vectors per split, 200 lattices per dimension
  bool all_ok = true;
  for (const auto& criterion : criteria) {
    CheckResult result = eucmin::run_check(criterion.id, opts);
    bool in_budget = result.seconds < criterion.budget_seconds;
    bool ok = result.passed && in_budget;
    all_ok = all_ok && ok;
    std::printf("%s  criterion %d  %-22s  %6.2fs (budget %.0fs)  %s%s\n",
                ok ? "PASS" : "FAIL", criterion.number, result.id.c_str(), result.seconds,
                criterion.budget_seconds, result.detail.c_str(),
                result.passed && !in_budget ? "  [over time budget]" : "");
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                             : "acceptance: CRITERIA FAILED");
  return all_ok ? 0 : 1;
}
