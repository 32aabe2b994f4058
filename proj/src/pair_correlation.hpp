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

#ifndef LOWDISC_PAIR_CORRELATION_HPP
#define LOWDISC_PAIR_CORRELATION_HPP

#include <cstdint>
#include <vector>

#include "sequences.hpp"

namespace lowdisc {

/// Torus distance of two points in [0,1)^d under the max norm: per
/// coordinate the distance to the nearest integer of the difference, then
/// the maximum. This exact expression (|a-b|, then min with 1-|a-b|) is the
/// reference semantics every counting path reproduces bit-for-bit.
double torus_distance(const double* a, const double* b, int dimension);

/// Number of ordered pairs (l, m), l != m, with distance <= radius
/// (< radius when strict). Sorted sweep in d = 1, cell bucketing in d >= 2;
/// both exact. radius >= 1/2 saturates the metric (all pairs match when
/// non-strict) and is handled by the same comparison semantics.
std::int64_t pair_count(const PointSet& ps, double radius, bool strict);

/// Ordered-pair counts for a list of radii over the same d = 1 point set;
/// one O(N) window pass per radius, bit-identical to pair_count.
std::vector<std::int64_t> pair_count_multi_1d(const PointSet& ps,
                                              const std::vector<double>& radii, bool strict);

/// Normalized pair-correlation statistic at scale s N^-alpha:
/// value = raw_count / (N^2 * vol) with vol = min(2 s N^-alpha, 1)^d.
struct PairCorrelationPoint {
  std::int64_t n = 0;
  double s = 0.0;
  double alpha = 1.0;
  int dimension = 1;
  std::int64_t raw_count = 0;
  double ball_volume = 0.0;
  double value = 0.0;
  bool saturated = false;  // s N^-alpha >= 1/2, the statistic clips
};

PairCorrelationPoint pair_correlation(const PointSet& ps, double s, double alpha,
                                      bool strict = false);

/// F(K, N) = max_{s = 1..K} | count(< s/N^alpha) / (2s) - N^{2-alpha} |,
/// counts of ordered pairs with strict comparison. Monotone non-decreasing
/// in K. K <= N/2 required (any K allowed for the degenerate N = 1).
struct DeviationStatistic {
  std::int64_t k = 0;
  std::int64_t n = 0;
  double alpha = 1.0;
  double value = 0.0;
  std::int64_t argmax_s = 0;
};

DeviationStatistic deviation_statistic(const PointSet& ps, std::int64_t k, double alpha);

/// Pair-correlation values over an (N, s) grid with a per-s convergence
/// diagnostic: least-squares slope of log|value - 1| against log N.
struct NumberVarianceCurve {
  double alpha = 1.0;
  std::vector<double> s_values;
  std::vector<std::int64_t> n_list;
  std::vector<PairCorrelationPoint> table;  // row-major: n_list x s_values
  struct Fit {
    double s = 0.0;
    double slope = 0.0;
    double r_squared = 0.0;
    int points_used = 0;
  };
  std::vector<Fit> fits;
};

NumberVarianceCurve number_variance_curve(const SequenceSpec& spec, double alpha,
                                          const std::vector<double>& s_values,
                                          const std::vector<std::int64_t>& n_list,
                                          bool strict = false);

}  // namespace lowdisc

#endif  // LOWDISC_PAIR_CORRELATION_HPP
