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

#ifndef LOWDISC_DISCREPANCY_HPP
#define LOWDISC_DISCREPANCY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gap_analysis.hpp"
#include "sequences.hpp"

namespace lowdisc {

enum class DiscrepancyMethod { exact_1d, grid_md };

/// Star discrepancy (and, in d = 1, the extreme discrepancy) with the box
/// witnessing the supremum. In d = 1 the exact closed forms are
///   D*_N = 1/(2N) + max_n |x*_n - (2n-1)/(2N)|
///   D_N  = 1/N + max_n (n/N - x*_n) - min_n (n/N - x*_n),
/// both validated against brute-force interval oracles in the tests.
struct DiscrepancyReport {
  std::int64_t n = 0;
  int dimension = 1;
  double star = 0.0;
  std::optional<double> extreme;  // d = 1 only
  DiscrepancyMethod method = DiscrepancyMethod::exact_1d;
  std::vector<double> witness_b;  // anchored box [0, b)
  bool witness_closed = false;    // supremum approached with the boundary included
  double witness_deviation = 0.0; // signed: count/N - volume at the witness
};

DiscrepancyReport star_discrepancy_1d(const PointSet& ps);
double extreme_discrepancy_1d(const PointSet& ps);

/// Exact star discrepancy over the coordinate-induced critical grid
/// (d <= 3). Work scales like N^d; requests beyond max_cost are refused with
/// a suggested N in the error message.
DiscrepancyReport star_discrepancy_md(const PointSet& ps, std::int64_t max_cost = 4'000'000'000);

/// Randomized-box probe: a guaranteed lower bound on the star discrepancy.
double star_discrepancy_lower_bound(const PointSet& ps, std::int64_t boxes, std::uint64_t seed);

/// Gap-structure discrepancy bound: with gap classes (L_k, N_k), R = N L_K - 2
/// and eps = max_{j,k} |n_k(j) - (N_k/N) j| where n_k(j) counts class-k gaps
/// between x*_1 and x*_j, the bound D*_N <= (R+3)/N + eps sum_k L_k holds for
/// sequences with finitely many gap lengths.
struct GapBoundReport {
  std::int64_t n = 0;
  GapSpectrum spectrum;
  double r = 0.0;
  double epsilon = 0.0;
  double bound = 0.0;
  double measured_star = 0.0;
  bool satisfied = false;
};

GapBoundReport gap_based_bound(const PointSet& ps,
                               double grouping_tolerance = kDefaultGapTolerance);

/// Pair-correlation discrepancy bound: with K in [N^{2a/5}/2, N^{2a/5}]
/// (default floor(N^{2a/5})) and F the deviation statistic at K^2,
///   N^alpha D*_N <= 5 max(N^{1-alpha/5}, sqrt(N^alpha F(K^2, N))).
struct PcBoundReport {
  std::int64_t n = 0;
  double alpha = 1.0;
  std::int64_t k = 0;
  double f_value = 0.0;   // F(K^2, N)
  double bound = 0.0;
  double measured = 0.0;  // N^alpha * D*_N
  bool satisfied = false;
};

PcBoundReport pc_based_bound(const PointSet& ps, double alpha, std::int64_t k_override = 0);

}  // namespace lowdisc

#endif  // LOWDISC_DISCREPANCY_HPP
