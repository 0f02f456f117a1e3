#pragma once

// Property suite behind `surfdyn verify` and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

namespace surfdyn::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  /// Trial batches run under OpenMP; false gives the serial reference order.
  bool parallel = true;
};

CheckResult check_normal_form_exactness(const SuiteOptions& opt = {});
CheckResult check_nonresonant_linearization(const SuiteOptions& opt = {});
CheckResult check_koenigs_equivalence(const SuiteOptions& opt = {});
CheckResult check_hj_round_trip(const SuiteOptions& opt = {});
CheckResult check_cycle_exclusion(const SuiteOptions& opt = {});
CheckResult check_propagation_soundness(const SuiteOptions& opt = {});
CheckResult check_orbifold_table(const SuiteOptions& opt = {});
CheckResult check_decision_table(const SuiteOptions& opt = {});

/// The eight acceptance checks above, in order.
std::vector<CheckResult> acceptance_checks(const SuiteOptions& opt = {});
/// Module invariants not already covered by the acceptance checks.
std::vector<CheckResult> invariant_checks(const SuiteOptions& opt = {});
/// acceptance_checks followed by invariant_checks.
std::vector<CheckResult> full_suite(const SuiteOptions& opt = {});

}  // namespace surfdyn::verify
