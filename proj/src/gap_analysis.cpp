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

#include "gap_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace lowdisc {

namespace {

constexpr std::size_t kMaxTrackedFamilies = 64;

// eta(k) = |q_k z - p_k|, the convergent residual. eta(-1) = 1 by the seed
// convention, eta(0) = {z}; for k >= 1 this is the nearest-integer norm.
DdReal residual(const CfExpansion& cf, int k) {
  if (k < 0) return dd_from(1.0);
  if (k == 0) return dd_frac(cf.value);
  return torus_norm_of_multiple(cf.value, cf.convergents[static_cast<std::size_t>(k)].second);
}

struct FamilyTrack {
  std::vector<double> lengths;     // NaN where absent
  std::vector<double> trajectory;  // NaN where absent
  int matched_steps = 0;
};

GapClassification::Family finish_family(const FamilyTrack& t, int rank, std::size_t steps) {
  GapClassification::Family f;
  f.rank = rank;
  f.lengths = t.lengths;
  f.trajectory = t.trajectory;
  f.complete = t.matched_steps == static_cast<int>(steps);
  double tmin = std::numeric_limits<double>::infinity();
  double tmax = 0.0;
  for (double v : f.trajectory) {
    if (std::isnan(v)) continue;
    tmin = std::min(tmin, v);
    tmax = std::max(tmax, v);
  }
  f.traj_min = std::isfinite(tmin) ? tmin : 0.0;
  f.traj_max = tmax;

  if (!f.complete) {
    f.label = GapLabel::undetermined;
    return f;
  }
  double first = f.trajectory.front();
  double last = f.trajectory.back();
  // Finite-data trichotomy bands: limits cannot be certified at desk scale,
  // so decay/growth by a factor of two with a clear terminal value wins, and
  // an order-one band (max/min <= 8) reads as intermediate.
  if (last <= first / 2.0 && last < 0.1) {
    f.label = GapLabel::alpha_small;
  } else if (last >= first * 2.0 && last > 10.0) {
    f.label = GapLabel::alpha_large;
  } else if (f.traj_min > 0.0 && f.traj_max / f.traj_min <= 8.0) {
    f.label = GapLabel::alpha_intermediate;
  } else {
    f.label = GapLabel::undetermined;
  }
  return f;
}

}  // namespace

const char* gap_label_name(GapLabel label) {
  switch (label) {
    case GapLabel::alpha_small: return "alpha_small";
    case GapLabel::alpha_intermediate: return "alpha_intermediate";
    case GapLabel::alpha_large: return "alpha_large";
    case GapLabel::undetermined: return "undetermined";
  }
  return "undetermined";
}

const char* obstruction_status_name(ObstructionStatus s) {
  switch (s) {
    case ObstructionStatus::indicated: return "indicated";
    case ObstructionStatus::not_indicated: return "not_indicated";
    case ObstructionStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

GapSpectrum gap_spectrum(const PointSet& ps, double grouping_tolerance) {
  if (ps.dimension != 1)
    throw Error(ErrorCode::invalid_argument, "gap_spectrum: defined for d = 1 only");
  if (ps.n < 1) throw Error(ErrorCode::invalid_argument, "gap_spectrum: need at least one point");
  if (grouping_tolerance < 0.0)
    throw Error(ErrorCode::invalid_argument, "gap_spectrum: tolerance must be >= 0");

  GapSpectrum spec;
  spec.n = ps.n;
  spec.grouping_tolerance = grouping_tolerance;

  std::vector<double> x = ps.data;
  std::sort(x.begin(), x.end());

  std::vector<double> gaps(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) gaps[i] = x[i + 1] - x[i];
  gaps[x.size() - 1] = 1.0 - (x.back() - x.front());  // wraparound gap
  std::sort(gaps.begin(), gaps.end());

  // Group values whose neighbours lie within the tolerance; the class
  // representative is the mean, which keeps sum(N_k L_k) = sum of all gaps.
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= gaps.size(); ++i) {
    if (i == gaps.size() || gaps[i] - gaps[i - 1] > grouping_tolerance) {
      double sum = 0.0;
      for (std::size_t j = begin; j < i; ++j) sum += gaps[j];
      double rep = sum / static_cast<double>(i - begin);
      spec.lengths.push_back(rep);
      spec.multiplicities.push_back(static_cast<std::int64_t>(i - begin));
      begin = i;
    }
  }
  if (!spec.lengths.empty() && spec.lengths.front() <= grouping_tolerance)
    spec.has_duplicates = true;
  return spec;
}

ThreeGapPrediction three_gap_predict(const CfExpansion& cf, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "three_gap_predict: N must be >= 1");

  ThreeGapPrediction pred;
  pred.n = n;
  if (n == 1) {
    pred.degenerate = true;
    pred.l2 = 1.0;
    pred.n2 = 1;
    pred.l3 = 1.0;
    return pred;
  }

  pred.ostrowski = ostrowski_expand(n, cf);
  const int t = pred.ostrowski.top_index;
  const auto& digits = pred.ostrowski.digits;
  const std::int64_t b_t = digits[static_cast<std::size_t>(t)];
  const std::int64_t q_t = cf.convergents[static_cast<std::size_t>(t)].second;
  const std::int64_t q_tm1 = t >= 1 ? cf.convergents[static_cast<std::size_t>(t - 1)].second : 0;
  const std::int64_t rem = n - b_t * q_t;

  // Reduce to the gap-refinement decomposition N = b q_nu + q_{nu-1} + r with
  // 0 <= r < q_nu: distinct lengths are eta(nu), eta(nu-1) - b eta(nu) and
  // their sum, with multiplicities N - q_nu, r and q_nu - r.
  int nu;
  std::int64_t b, r;
  enum { kTopZero, kCarryFree, kBorrow, kDescend } shape;
  if (t == 0) {
    nu = 0;
    b = b_t;
    r = 0;
    shape = kTopZero;
  } else if (rem >= q_tm1) {
    nu = t;
    b = b_t;
    r = rem - q_tm1;
    shape = kCarryFree;
  } else if (b_t >= 2) {
    nu = t;
    b = b_t - 1;
    r = q_t + rem - q_tm1;
    shape = kBorrow;
  } else {
    nu = t - 1;
    b = cf.digits[static_cast<std::size_t>(t)];
    r = rem;
    shape = kDescend;
  }

  const std::int64_t q_nu = cf.convergents[static_cast<std::size_t>(nu)].second;
  DdReal small_len = residual(cf, nu);
  DdReal mid_len = dd_sub(residual(cf, nu - 1), dd_mul_d(small_len, static_cast<double>(b)));
  DdReal large_len = dd_add(small_len, mid_len);
  const std::int64_t small_count = n - q_nu;
  const std::int64_t mid_count = r;
  const std::int64_t large_count = q_nu - r;

  switch (shape) {
    case kTopZero:
      pred.l1 = dd_to_double(small_len);
      pred.n1 = small_count;
      pred.l2 = dd_to_double(large_len);
      pred.n2 = large_count;
      break;
    case kCarryFree:
    case kBorrow:
      pred.l1 = dd_to_double(small_len);
      pred.n1 = small_count;
      pred.l2 = dd_to_double(mid_len);
      pred.n2 = mid_count;
      break;
    case kDescend:
      pred.l1 = dd_to_double(mid_len);
      pred.n1 = mid_count;
      pred.l2 = dd_to_double(small_len);
      pred.n2 = small_count;
      break;
  }
  pred.l3 = pred.l1 + pred.l2;
  pred.n3 = n - pred.n1 - pred.n2;

  // Textbook multiplicity for the second length, kept for the diagnostic:
  // (b_{t-1} - 1) q_{t-1} + sum_{k <= t-2} b_k q_k.
  std::int64_t literal = 0;
  if (t >= 1) {
    std::int64_t b_tm1 = digits[static_cast<std::size_t>(t - 1)];
    literal = (b_tm1 - 1) * q_tm1;
    for (int k = 0; k <= t - 2; ++k)
      literal += digits[static_cast<std::size_t>(k)] *
                 cf.convergents[static_cast<std::size_t>(k)].second;
  }
  pred.n2_literal = literal;
  return pred;
}

std::vector<std::pair<double, std::int64_t>> predicted_spectrum(const ThreeGapPrediction& p) {
  std::vector<std::pair<double, std::int64_t>> out;
  auto push = [&out](double len, std::int64_t count) {
    if (count <= 0) return;
    for (auto& e : out) {
      if (std::abs(e.first - len) <= 1e-15 * std::max(1.0, std::abs(len))) {
        e.second += count;
        return;
      }
    }
    out.emplace_back(len, count);
  };
  push(p.l1, p.n1);
  push(p.l2, p.n2);
  push(p.l3, p.n3);
  std::sort(out.begin(), out.end());
  return out;
}

ThreeGapComparison three_gap_compare(const ThreeGapPrediction& pred, const GapSpectrum& emp,
                                     double tolerance) {
  ThreeGapComparison cmp;
  auto predicted = predicted_spectrum(pred);

  std::ostringstream diag;
  if (predicted.size() != emp.distinct()) {
    diag << "predicted " << predicted.size() << " distinct lengths, spectrum has "
         << emp.distinct();
    cmp.diagnostic = diag.str();
    return cmp;
  }
  double max_err = 0.0;
  bool mult_ok = true;
  for (std::size_t k = 0; k < predicted.size(); ++k) {
    max_err = std::max(max_err, std::abs(predicted[k].first - emp.lengths[k]));
    if (predicted[k].second != emp.multiplicities[k]) mult_ok = false;
  }
  cmp.max_length_error = max_err;
  cmp.multiplicities_match = mult_ok;
  cmp.matched = mult_ok && max_err <= tolerance;
  if (!cmp.matched) {
    diag << "N=" << pred.n << " predicted {";
    for (auto& e : predicted) diag << " " << e.first << "x" << e.second;
    diag << " } vs empirical {";
    for (std::size_t k = 0; k < emp.distinct(); ++k)
      diag << " " << emp.lengths[k] << "x" << emp.multiplicities[k];
    diag << " }, max length error " << max_err << ", literal N2 " << pred.n2_literal;
    cmp.diagnostic = diag.str();
  }
  return cmp;
}

GapClassification classify_spectra(const std::vector<GapSpectrum>& spectra,
                                   const std::vector<std::int64_t>& n_list, double alpha) {
  if (spectra.size() != n_list.size())
    throw Error(ErrorCode::invalid_argument, "classify: spectra and N list differ in size");
  if (n_list.size() < 4)
    throw Error(ErrorCode::invalid_argument, "classify: need at least 4 values of N");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw Error(ErrorCode::invalid_argument, "classify: N list must be strictly increasing");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error(ErrorCode::invalid_argument, "classify: alpha must be in (0, 1]");

  GapClassification cls;
  cls.alpha = alpha;
  cls.n_list = n_list;

  bool too_many = false;
  for (const auto& s : spectra)
    if (s.distinct() > kMaxTrackedFamilies) too_many = true;
  if (too_many) return cls;  // no trackable family structure (e.g. random points)

  const std::size_t steps = spectra.size();
  bool constant_k = true;
  for (const auto& s : spectra)
    if (s.distinct() != spectra.front().distinct()) constant_k = false;
  cls.rank_matched = constant_k;

  std::vector<FamilyTrack> tracks;
  auto traj = [alpha](std::int64_t n, double len) {
    return std::pow(static_cast<double>(n), alpha) * len;
  };

  if (constant_k) {
    // The three-gap refinement preserves rank order, so families match by rank.
    tracks.resize(spectra.front().distinct());
    for (std::size_t i = 0; i < steps; ++i) {
      for (std::size_t j = 0; j < tracks.size(); ++j) {
        tracks[j].lengths.push_back(spectra[i].lengths[j]);
        tracks[j].trajectory.push_back(traj(n_list[i], spectra[i].lengths[j]));
        tracks[j].matched_steps++;
      }
    }
  } else {
    // Variable K: continue each family to the nearest trajectory value.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t j = 0; j < spectra[0].distinct(); ++j) {
      FamilyTrack t;
      t.lengths.push_back(spectra[0].lengths[j]);
      t.trajectory.push_back(traj(n_list[0], spectra[0].lengths[j]));
      t.matched_steps = 1;
      tracks.push_back(std::move(t));
    }
    for (std::size_t i = 1; i < steps; ++i) {
      std::vector<bool> used(spectra[i].distinct(), false);
      // Greedy best-pair assignment on |log T_new / T_old|.
      struct Cand {
        double cost;
        std::size_t track, cls;
      };
      std::vector<Cand> cands;
      for (std::size_t a = 0; a < tracks.size(); ++a) {
        if (tracks[a].matched_steps != static_cast<int>(i)) continue;  // already broken
        double prev = tracks[a].trajectory.back();
        for (std::size_t c = 0; c < spectra[i].distinct(); ++c) {
          double now = traj(n_list[i], spectra[i].lengths[c]);
          if (prev > 0.0 && now > 0.0)
            cands.push_back({std::abs(std::log(now / prev)), a, c});
        }
      }
      std::sort(cands.begin(), cands.end(),
                [](const Cand& x, const Cand& y) { return x.cost < y.cost; });
      std::vector<bool> track_used(tracks.size(), false);
      for (const auto& c : cands) {
        if (track_used[c.track] || used[c.cls]) continue;
        track_used[c.track] = true;
        used[c.cls] = true;
        tracks[c.track].lengths.push_back(spectra[i].lengths[c.cls]);
        tracks[c.track].trajectory.push_back(traj(n_list[i], spectra[i].lengths[c.cls]));
        tracks[c.track].matched_steps++;
      }
      for (auto& t : tracks) {
        if (t.lengths.size() < i + 1) {
          t.lengths.push_back(nan);
          t.trajectory.push_back(nan);
        }
      }
      for (std::size_t c = 0; c < spectra[i].distinct(); ++c) {
        if (used[c]) continue;
        FamilyTrack t;
        t.lengths.assign(i, nan);
        t.trajectory.assign(i, nan);
        t.lengths.push_back(spectra[i].lengths[c]);
        t.trajectory.push_back(traj(n_list[i], spectra[i].lengths[c]));
        t.matched_steps = 1;  // late starters can never be complete
        tracks.push_back(std::move(t));
      }
    }
  }

  // Rank by the final observed length.
  std::vector<std::size_t> order(tracks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&tracks](std::size_t a, std::size_t b) {
    double la = tracks[a].lengths.back(), lb = tracks[b].lengths.back();
    if (std::isnan(la)) return false;
    if (std::isnan(lb)) return true;
    return la < lb;
  });
  for (std::size_t i = 0; i < order.size(); ++i)
    cls.families.push_back(finish_family(tracks[order[i]], static_cast<int>(i), steps));
  return cls;
}

GapClassification classify_gaps(const SequenceSpec& spec, double alpha,
                                const std::vector<std::int64_t>& n_list,
                                double grouping_tolerance) {
  if (spec.dimension != 1)
    throw Error(ErrorCode::invalid_argument, "classify_gaps: defined for d = 1 only");
  std::vector<GapSpectrum> spectra;
  spectra.reserve(n_list.size());
  for (std::int64_t n : n_list) spectra.push_back(gap_spectrum(generate(spec, n), grouping_tolerance));
  return classify_spectra(spectra, n_list, alpha);
}

ObstructionReport check_obstructions_spectra(const std::vector<GapSpectrum>& spectra,
                                             const std::vector<std::int64_t>& n_list,
                                             double alpha) {
  ObstructionReport rep;
  rep.alpha = alpha;
  rep.classification = classify_spectra(spectra, n_list, alpha);
  const auto& families = rep.classification.families;

  std::ostringstream detail;
  if (families.empty()) {
    rep.detail = "no trackable gap families (gap count not finite at this scale)";
    return rep;
  }
  bool any_undetermined = false;
  bool any_intermediate = false;
  for (const auto& f : families) {
    if (!f.complete || f.label == GapLabel::undetermined) any_undetermined = true;
    if (f.label == GapLabel::alpha_intermediate) any_intermediate = true;
  }

  if (any_intermediate) {
    rep.obstruction1 = ObstructionStatus::indicated;
  } else if (any_undetermined) {
    rep.obstruction1 = ObstructionStatus::inconclusive;
  } else {
    rep.obstruction1 = ObstructionStatus::not_indicated;
  }

  // Obstruction 2 concerns the largest alpha-small family: does N_i * L also
  // vanish? families are ranked by length, so take the last small one.
  const GapClassification::Family* largest_small = nullptr;
  for (const auto& f : families)
    if (f.label == GapLabel::alpha_small) largest_small = &f;
  if (any_undetermined && largest_small == nullptr) {
    rep.obstruction2 = ObstructionStatus::inconclusive;
  } else if (largest_small == nullptr) {
    rep.obstruction2 = ObstructionStatus::not_indicated;
    detail << "no alpha-small family; ";
  } else {
    double first = 0.0, last = 0.0;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
      double u = static_cast<double>(n_list[i]) * largest_small->lengths[i];
      if (i == 0) first = u;
      last = u;
    }
    detail << "largest alpha-small family: N*L from " << first << " to " << last << "; ";
    if (last <= first / 2.0 && last < 0.1) {
      rep.obstruction2 = ObstructionStatus::indicated;
    } else {
      rep.obstruction2 = ObstructionStatus::not_indicated;
    }
  }

  detail << "families:";
  for (const auto& f : families)
    detail << " [rank " << f.rank << " " << gap_label_name(f.label) << " traj "
           << f.traj_min << ".." << f.traj_max << "]";
  rep.detail = detail.str();
  return rep;
}

ObstructionReport check_obstructions(const SequenceSpec& spec, double alpha,
                                     const std::vector<std::int64_t>& n_list,
                                     double grouping_tolerance) {
  std::vector<GapSpectrum> spectra;
  spectra.reserve(n_list.size());
  for (std::int64_t n : n_list) spectra.push_back(gap_spectrum(generate(spec, n), grouping_tolerance));
  return check_obstructions_spectra(spectra, n_list, alpha);
}

}  // namespace lowdisc
