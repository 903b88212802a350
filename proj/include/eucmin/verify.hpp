#ifndef EUCMIN_VERIFY_HPP
#define EUCMIN_VERIFY_HPP

// Verification suites exercising the documented numeric claims end to end.
// Each check is self-contained; a false `passed` is a genuine finding.

#include <cstdint>
#include <string>
#include <vector>

#include <mpfr.h>

namespace eucmin {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 20250809;
  mpfr_prec_t prec = 128;
  std::uint64_t node_budget = 100000000;
  int length_samples_per_split = 100000;
  int lattices_per_dim = 200;
};

CheckResult check_table_reproduction(const VerifyOptions& opts = {});
CheckResult check_hermite_consistency(const VerifyOptions& opts = {});
CheckResult check_blichfeldt_scan(const VerifyOptions& opts = {});
CheckResult check_improvement_factor(const VerifyOptions& opts = {});
CheckResult check_length_inequality(const VerifyOptions& opts = {});
CheckResult check_det_identity(const VerifyOptions& opts = {});
CheckResult check_gaussian_minima(const VerifyOptions& opts = {});
CheckResult check_minkowski_products(const VerifyOptions& opts = {});
CheckResult check_a_equals_s_comparison(const VerifyOptions& opts = {});

std::vector<std::string> check_ids();
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts = {});
CheckResult run_check(const std::string& id, const VerifyOptions& opts = {});

}  // namespace eucmin

#endif
