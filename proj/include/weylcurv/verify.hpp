#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weylcurv {

struct SuiteOptions {
  int n_lo = 4;
  int n_hi = 6;
  std::uint64_t seed = 7;
  int samples = 10000;  // sampled planes per tensor (theorem-a)
  int count = 0;        // random cases; 0 = suite default
};

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::vector<CheckLine> checks;
  std::vector<std::string> notes;
};

/// Known suites: dfcore-identities, lemma21, h4-routes, examples, theorem31,
/// theorem-a, neck-coeffs, scaling.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

SuiteResult verify_dfcore_identities(const SuiteOptions& opts);
SuiteResult verify_lemma21(const SuiteOptions& opts);
SuiteResult verify_h4_routes(const SuiteOptions& opts);
SuiteResult verify_examples(const SuiteOptions& opts);
SuiteResult verify_theorem31(const SuiteOptions& opts);
SuiteResult verify_theorem_a_suite(const SuiteOptions& opts);
SuiteResult verify_neck_coeffs(const SuiteOptions& opts);
SuiteResult verify_scaling(const SuiteOptions& opts);

}  // namespace weylcurv
