/*
 * Copyright 2026 The lowdisc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOWDISC_VERIFY_HPP
#define LOWDISC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "experiment_config.hpp"

namespace lowdisc {

enum class CaseStatus { pass, fail, inconclusive };
const char* case_status_name(CaseStatus s);

/// One verified statement: pass/fail for literal finite-N claims,
/// inconclusive where the underlying statement is asymptotic and the finite
/// surrogate cannot decide it.
struct CaseResult {
  std::string name;
  CaseStatus status = CaseStatus::fail;
  double margin = 0.0;  // distance to the failure boundary (sign: >= 0 passes)
  std::string detail;
  double runtime_ms = 0.0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  int failures = 0;
  int inconclusive = 0;
  double runtime_ms = 0.0;
};

/// Suites bundling the quantitative statements this library checks
/// empirically. Deterministic given the config (seeds included).
///   three_gap                 gap count <= 3 and L_max = L1 + L2; predictions
///   ostrowski                 digit expansion round-trip and constraints
///   number_variance           F -> 1 trends (deterministic and random baselines)
///   ppc_failure               golden-mean Kronecker has F = 0 at s = 1/2, alpha = 1
///   gap_bound                 gap-structure discrepancy bound
///   pc_bound                  pair-correlation discrepancy bound
///   vdc_low_discrepancy       N D*_N <= log2(N) + 2 for van der Corput base 2
///   kronecker_low_discrepancy N D*_N <= 3 ln N for the golden-mean sequence
///   obstruction               gap trichotomy and the two obstructions
std::vector<std::string> suite_ids();
bool is_suite_id(const std::string& id);

SuiteResult run_suite(const std::string& id, const ExperimentConfig& config);

/// Stable-field-order serializations. Runtimes are included only when
/// with_timings is set so that identical configs give identical bytes.
std::string suites_to_json(const std::vector<SuiteResult>& results, bool with_timings);
std::string suites_to_csv(const std::vector<SuiteResult>& results, bool with_timings);

}  // namespace lowdisc

#endif  // LOWDISC_VERIFY_HPP
