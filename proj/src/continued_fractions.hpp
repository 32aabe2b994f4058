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

#ifndef LOWDISC_CONTINUED_FRACTIONS_HPP
#define LOWDISC_CONTINUED_FRACTIONS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dd_real.hpp"

namespace lowdisc {

/// Continued fraction expansion [a_0; a_1, ..., a_m] of a real number, with
/// the convergents p_n/q_n computed by the standard second-order recurrence
///   p_n = a_n p_{n-1} + p_{n-2},  q_n = a_n q_{n-1} + q_{n-2}
/// seeded with p_{-2}=0, p_{-1}=1, q_{-2}=1, q_{-1}=0. convergents[n]
/// corresponds to digits[n]; q_0 = 1 and q_n is strictly increasing for
/// n >= 1.
struct CfExpansion {
  DdReal value;
  std::vector<std::int64_t> digits;
  std::vector<std::pair<std::int64_t, std::int64_t>> convergents;
  bool terminated = false;        // the expansion ended exactly (rational input)
  bool digits_truncated = false;  // stopped at the precision budget of the input
  bool q_overflow = false;        // recurrence would leave the 64-bit range
};

/// Ostrowski digits of N with respect to the convergent denominators of a
/// continued fraction: N = sum_k digits[k] * q_k, digits aligned with the
/// stored convergents starting at q_0 = 1. The greedy (maximal) expansion is
/// the unique one with 0 <= b_k <= a_{k+1}, b_0 <= a_1 - 1, and b_{k-1} = 0
/// whenever b_k = a_{k+1}.
struct OstrowskiDigits {
  std::int64_t n = 0;
  std::vector<std::int64_t> digits;
  int top_index = -1;  // largest k with digits[k] > 0 (-1 for n == 0)
};

/// Expand x (with source precision eps_abs, the absolute uncertainty of the
/// representation of x) into at most max_terms digits, stopping early when
/// the convergent already approximates x within tolerance, when a rational
/// input terminates, or when further digits would not be determined by the
/// input precision (digits_truncated).
CfExpansion cf_expand_dd(const DdReal& x, int max_terms, double tolerance, double eps_abs);

/// Expansion of a plain double; the source precision is one ulp of x.
CfExpansion cf_expand(double x, int max_terms, double tolerance);

/// Built-in high-precision expansions: "phi" (golden mean, all digits 1) and
/// "sqrt2" ([1; 2, 2, ...]). max_terms is capped where q_n leaves int64.
CfExpansion cf_named(const std::string& name, int max_terms);
bool cf_has_named(const std::string& name);
DdReal dd_named(const std::string& name);

/// Recompute convergents from digits with checked 64-bit arithmetic.
/// On overflow the result holds all pairs up to the last safe index and
/// overflow_at reports the first digit index that could not be computed
/// (-1 when everything fit).
struct ConvergentResult {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  int overflow_at = -1;
};
ConvergentResult convergents_from_digits(const std::vector<std::int64_t>& digits);

/// Greedy Ostrowski expansion of N >= 1. Requires a stored convergent
/// denominator strictly larger than N; otherwise throws (expand cf further).
OstrowskiDigits ostrowski_expand(std::int64_t n, const CfExpansion& cf);

/// Check the digit constraints of the greedy expansion against the digits of
/// cf; returns an empty string when valid, else a description of the breach.
std::string ostrowski_validate(const OstrowskiDigits& o, const CfExpansion& cf);

/// Distance of x to the nearest integer, in [0, 1/2].
double torus_norm(double x);

/// ||q * z|| computed in double-double precision (q must fit a double exactly).
DdReal torus_norm_of_multiple(const DdReal& z, std::int64_t q);

}  // namespace lowdisc

#endif  // LOWDISC_CONTINUED_FRACTIONS_HPP
