#pragma once

#include "equigeo/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace equigeo {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 100;        // sampled metrics per oracle call
  std::size_t random_vectors = 20;  // extra random vectors per space in the oracle check
  std::size_t random_cases = 200;   // cases per algebraic identity
  std::size_t reduction_cases = 100;
  double tol = kCriterionTol;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Spaces classified as the fixed-point line or as empty (sphere families).
std::vector<SpaceDescriptor> sphere_classification_cases();
/// Symmetric-triple spaces expected to give the line c(m0) = m0.
std::vector<SpaceDescriptor> triple_classification_cases();

/// Commutant dimensions frozen from the brute-force oracle.
struct CommutantGolden {
  SpaceDescriptor space;
  std::size_t dim = 0;
};
std::vector<CommutantGolden> commutant_goldens();

CheckResult check_sphere_classification(const SuiteOptions& o);
CheckResult check_triple_classification(const SuiteOptions& o);
CheckResult check_oracle_equivalence(const SuiteOptions& o);
CheckResult check_residual_reduction(const SuiteOptions& o);
CheckResult check_structural_identities(const SuiteOptions& o);
CheckResult check_commutant_dimensions(const SuiteOptions& o);
CheckResult check_algebraic_invariants(const SuiteOptions& o);

struct NamedCheck {
  std::string name;
  std::function<CheckResult(const SuiteOptions&)> run;
};
std::vector<NamedCheck> verification_checks();

/// Runs every check in order.
std::vector<CheckResult> run_verification_suite(const SuiteOptions& o);

/// One "PASS name (seconds) detail" line per check.
std::string format_suite(const std::vector<CheckResult>& results);

}  // namespace equigeo
