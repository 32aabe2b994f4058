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

#ifndef LOWDISC_GAP_ANALYSIS_HPP
#define LOWDISC_GAP_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "continued_fractions.hpp"
#include "sequences.hpp"

namespace lowdisc {

constexpr double kDefaultGapTolerance = 1e-9;

/// Distinct circle-gap lengths of the first N points with multiplicities,
/// sorted by increasing length. The wraparound gap from the largest point
/// back to the smallest (plus 1) is included, so multiplicities sum to N and
/// sum(N_k * L_k) = 1 up to rounding.
struct GapSpectrum {
  std::int64_t n = 0;
  std::vector<double> lengths;
  std::vector<std::int64_t> multiplicities;
  double grouping_tolerance = kDefaultGapTolerance;
  bool has_duplicates = false;  // a zero-length class was present (duplicate points)

  std::size_t distinct() const { return lengths.size(); }
};

GapSpectrum gap_spectrum(const PointSet& ps, double grouping_tolerance = kDefaultGapTolerance);

/// Three Gap Theorem prediction for the Kronecker sequence of cf.value at
/// step N, computed from the Ostrowski expansion of N:
///   L1 = ||q_t z||, L2 = ||q_{t-1} z|| - (b_t - 1) L1 - min(b_{t-1},1) L1,
///   L3 = L1 + L2, with t the top Ostrowski index.
/// Multiplicities carry the reconciled closed form (derived from the gap
/// refinement; n1 + n2 + n3 = N, zero counts mark absent lengths);
/// n2_literal keeps the uncorrected textbook variant for comparison.
struct ThreeGapPrediction {
  std::int64_t n = 0;
  double l1 = 0.0, l2 = 0.0, l3 = 0.0;
  std::int64_t n1 = 0, n2 = 0, n3 = 0;
  std::int64_t n2_literal = 0;
  OstrowskiDigits ostrowski;
  bool degenerate = false;  // N == 1: single gap of length 1, no prediction
};

ThreeGapPrediction three_gap_predict(const CfExpansion& cf, std::int64_t n);

/// The predicted spectrum with zero-multiplicity entries dropped and lengths
/// sorted ascending (duplicate lengths merged).
std::vector<std::pair<double, std::int64_t>> predicted_spectrum(const ThreeGapPrediction& p);

/// Compare a prediction with an empirical spectrum. matched == false carries
/// a diagnostic with both versions.
struct ThreeGapComparison {
  bool matched = false;
  double max_length_error = 0.0;
  bool multiplicities_match = false;
  std::string diagnostic;
};
ThreeGapComparison three_gap_compare(const ThreeGapPrediction& pred, const GapSpectrum& emp,
                                     double tolerance = 1e-12);

enum class GapLabel { alpha_small, alpha_intermediate, alpha_large, undetermined };
const char* gap_label_name(GapLabel label);

/// Trajectories N_i^alpha * L_j^(i) of gap-length families matched across an
/// increasing list of N values, with the finite-data trichotomy labels.
struct GapClassification {
  double alpha = 1.0;
  std::vector<std::int64_t> n_list;
  struct Family {
    int rank = 0;                    // by length at the last N where present
    std::vector<double> lengths;     // per N_i; NaN where unmatched
    std::vector<double> trajectory;  // N_i^alpha * L
    GapLabel label = GapLabel::undetermined;
    double traj_min = 0.0, traj_max = 0.0;  // observed surrogates for K_1, K_2
    bool complete = false;                  // matched across every N_i
  };
  std::vector<Family> families;
  bool rank_matched = false;  // the gap count K was constant across N_i
};

GapClassification classify_spectra(const std::vector<GapSpectrum>& spectra,
                                   const std::vector<std::int64_t>& n_list, double alpha);
GapClassification classify_gaps(const SequenceSpec& spec, double alpha,
                                const std::vector<std::int64_t>& n_list,
                                double grouping_tolerance = kDefaultGapTolerance);

enum class ObstructionStatus { indicated, not_indicated, inconclusive };
const char* obstruction_status_name(ObstructionStatus s);

/// Empirical check of the two pair-correlation obstructions: Obstruction 1
/// (an alpha-intermediate family exists) and Obstruction 2 (the largest
/// alpha-small family also has N_i * L -> 0). Undetermined classifications
/// propagate as inconclusive.
struct ObstructionReport {
  double alpha = 1.0;
  ObstructionStatus obstruction1 = ObstructionStatus::inconclusive;
  ObstructionStatus obstruction2 = ObstructionStatus::inconclusive;
  GapClassification classification;
  std::string detail;
};

ObstructionReport check_obstructions(const SequenceSpec& spec, double alpha,
                                     const std::vector<std::int64_t>& n_list,
                                     double grouping_tolerance = kDefaultGapTolerance);
ObstructionReport check_obstructions_spectra(const std::vector<GapSpectrum>& spectra,
                                             const std::vector<std::int64_t>& n_list, double alpha);

}  // namespace lowdisc

#endif  // LOWDISC_GAP_ANALYSIS_HPP
