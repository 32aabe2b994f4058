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

#include "discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "errors.hpp"
#include "pair_correlation.hpp"

namespace lowdisc {

namespace {

constexpr std::size_t kMaxGapClasses = 64;

}  // namespace

DiscrepancyReport star_discrepancy_1d(const PointSet& ps) {
  if (ps.dimension != 1)
    throw Error(ErrorCode::invalid_argument, "star_discrepancy_1d: d = 1 only");
  if (ps.n < 1) throw Error(ErrorCode::invalid_argument, "star_discrepancy_1d: empty point set");

  std::vector<double> x = ps.data;
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(ps.n);

  DiscrepancyReport rep;
  rep.n = ps.n;
  rep.dimension = 1;
  rep.method = DiscrepancyMethod::exact_1d;

  double best = -1.0;
  for (std::int64_t i = 0; i < ps.n; ++i) {
    double xi = x[static_cast<std::size_t>(i)];
    double dev = std::abs(xi - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n));
    if (dev > best) {
      best = dev;
      // Which side attains it: the open box [0, x_i) holding i points
      // (deficit) or the closed box [0, x_i] holding i+1 (excess).
      double deficit = xi - static_cast<double>(i) / n;
      double excess = static_cast<double>(i + 1) / n - xi;
      rep.witness_b.assign(1, xi);
      rep.witness_closed = excess >= deficit;
      rep.witness_deviation = rep.witness_closed ? excess : -deficit;
    }
  }
  rep.star = 1.0 / (2.0 * n) + best;

  rep.extreme = extreme_discrepancy_1d(ps);
  return rep;
}

double extreme_discrepancy_1d(const PointSet& ps) {
  if (ps.dimension != 1)
    throw Error(ErrorCode::invalid_argument, "extreme_discrepancy_1d: d = 1 only");
  if (ps.n < 1) throw Error(ErrorCode::invalid_argument, "extreme_discrepancy_1d: empty point set");
  std::vector<double> x = ps.data;
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(ps.n);
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < ps.n; ++i) {
    double v = static_cast<double>(i + 1) / n - x[static_cast<std::size_t>(i)];
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  return 1.0 / n + hi - lo;
}

namespace {

// Per-dimension critical values: the coordinates and 1. A box [0, b) only
// changes its count when some b_j crosses a coordinate, so the supremum is
// attained over this grid, approached from below (open count, strictly
// smaller points) or from above (closed count, <=).
std::vector<std::vector<double>> critical_grid(const PointSet& ps) {
  std::vector<std::vector<double>> crit(static_cast<std::size_t>(ps.dimension));
  for (int j = 0; j < ps.dimension; ++j) {
    auto& c = crit[static_cast<std::size_t>(j)];
    c.reserve(static_cast<std::size_t>(ps.n) + 1);
    for (std::int64_t i = 0; i < ps.n; ++i) c.push_back(ps.at(i, j));
    c.push_back(1.0);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return crit;
}

std::size_t grid_index(const std::vector<double>& crit, double v) {
  return static_cast<std::size_t>(std::lower_bound(crit.begin(), crit.end(), v) - crit.begin());
}

}  // namespace

DiscrepancyReport star_discrepancy_md(const PointSet& ps, std::int64_t max_cost) {
  const int d = ps.dimension;
  if (d == 1) return star_discrepancy_1d(ps);
  if (d > 3)
    throw Error(ErrorCode::budget, "star_discrepancy_md: exact computation supports d <= 3");
  if (ps.n < 1) throw Error(ErrorCode::invalid_argument, "star_discrepancy_md: empty point set");

  double cost = static_cast<double>(d) * std::pow(static_cast<double>(ps.n) + 1.0, d);
  if (ps.n > 3000 || cost > static_cast<double>(max_cost)) {
    std::int64_t suggested = std::min<std::int64_t>(
        3000, static_cast<std::int64_t>(std::pow(static_cast<double>(max_cost) / d, 1.0 / d)));
    throw Error(ErrorCode::budget,
                "star_discrepancy_md: N^d budget exceeded; reduce N to about " +
                    std::to_string(suggested) +
                    " or use star_discrepancy_lower_bound for a probe");
  }

  auto crit = critical_grid(ps);
  DiscrepancyReport rep;
  rep.n = ps.n;
  rep.dimension = d;
  rep.method = DiscrepancyMethod::grid_md;

  const double n = static_cast<double>(ps.n);
  const auto& cx = crit[0];
  const auto& cy = crit[1];
  const std::size_t ux = cx.size(), uy = cy.size();
  double best = -1.0;

  // cells[(ix+1)][(iy+1)] accumulates points at coordinate indices (ix, iy)
  // for all z processed so far; cur is its fresh 2-d prefix per z-slab, so
  // cur[a][b] counts points with x <= cx[a-1], y <= cy[b-1] (and z <= the
  // slab value for d = 3). Open counts read one grid cell back (coordinates
  // take only grid values) and the previous slab for d = 3.
  const std::size_t stride = uy + 1;
  std::vector<std::int32_t> cells((ux + 1) * stride, 0);
  std::vector<std::int64_t> cur((ux + 1) * stride, 0);
  std::vector<std::int64_t> prev(d == 3 ? (ux + 1) * stride : 0, 0);

  const std::size_t uz = d == 3 ? crit[2].size() : 1;
  std::vector<std::vector<std::int64_t>> by_slab(uz);
  for (std::int64_t i = 0; i < ps.n; ++i) {
    std::size_t iz = d == 3 ? grid_index(crit[2], ps.at(i, 2)) : 0;
    by_slab[iz].push_back(i);
  }

  for (std::size_t iz = 0; iz < uz; ++iz) {
    for (std::int64_t i : by_slab[iz]) {
      std::size_t ix = grid_index(cx, ps.at(i, 0));
      std::size_t iy = grid_index(cy, ps.at(i, 1));
      cells[(ix + 1) * stride + iy + 1]++;
    }
    for (std::size_t i = 0; i <= ux; ++i) {
      for (std::size_t j = 0; j <= uy; ++j) {
        std::int64_t v = cells[i * stride + j];
        if (i > 0) v += cur[(i - 1) * stride + j];
        if (j > 0) v += cur[i * stride + j - 1];
        if (i > 0 && j > 0) v -= cur[(i - 1) * stride + j - 1];
        cur[i * stride + j] = v;
      }
    }

    double bz = d == 3 ? crit[2][iz] : 1.0;
    for (std::size_t i = 0; i < ux; ++i) {
      for (std::size_t j = 0; j < uy; ++j) {
        double vol = cx[i] * cy[j] * bz;
        std::int64_t closed = cur[(i + 1) * stride + j + 1];
        std::int64_t open = d == 3 ? (iz == 0 ? 0 : prev[i * stride + j]) : cur[i * stride + j];
        double deficit = vol - static_cast<double>(open) / n;
        double excess = static_cast<double>(closed) / n - vol;
        double dev = std::max(deficit, excess);
        if (dev > best) {
          best = dev;
          rep.witness_b = {cx[i], cy[j]};
          if (d == 3) rep.witness_b.push_back(bz);
          rep.witness_closed = excess >= deficit;
          rep.witness_deviation = rep.witness_closed ? excess : -deficit;
        }
      }
    }
    if (d == 3) std::swap(prev, cur);
  }
  rep.star = best;
  return rep;
}

double star_discrepancy_lower_bound(const PointSet& ps, std::int64_t boxes, std::uint64_t seed) {
  if (boxes < 1) throw Error(ErrorCode::invalid_argument, "lower_bound: need at least one box");
  const int d = ps.dimension;
  const double n = static_cast<double>(ps.n);
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  double best = 0.0;
  std::vector<double> b(static_cast<std::size_t>(d));
  for (std::int64_t t = 0; t < boxes; ++t) {
    double vol = 1.0;
    for (int j = 0; j < d; ++j) {
      b[static_cast<std::size_t>(j)] = unit();
      vol *= b[static_cast<std::size_t>(j)];
    }
    std::int64_t cnt = 0;
    for (std::int64_t i = 0; i < ps.n; ++i) {
      bool in = true;
      for (int j = 0; j < d; ++j)
        if (!(ps.at(i, j) < b[static_cast<std::size_t>(j)])) in = false;
      cnt += in;
    }
    best = std::max(best, std::abs(static_cast<double>(cnt) / n - vol));
  }
  return best;
}

GapBoundReport gap_based_bound(const PointSet& ps, double grouping_tolerance) {
  if (ps.dimension != 1) throw Error(ErrorCode::invalid_argument, "gap_based_bound: d = 1 only");
  GapBoundReport rep;
  rep.n = ps.n;
  rep.spectrum = gap_spectrum(ps, grouping_tolerance);
  if (rep.spectrum.distinct() > kMaxGapClasses)
    throw Error(ErrorCode::domain,
                "gap_based_bound: " + std::to_string(rep.spectrum.distinct()) +
                    " distinct gap lengths; the finite-gap premise does not hold for this input");

  std::vector<double> x = ps.data;
  std::sort(x.begin(), x.end());
  const std::int64_t n = ps.n;
  const std::size_t k_classes = rep.spectrum.distinct();

  // Class of each interior gap (the j-1 gaps between x*_1 and x*_j); classes
  // are tolerance-separated so nearest length identifies the class.
  auto class_of = [&rep](double gap) {
    std::size_t best = 0;
    double err = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < rep.spectrum.distinct(); ++c) {
      double e = std::abs(gap - rep.spectrum.lengths[c]);
      if (e < err) {
        err = e;
        best = c;
      }
    }
    return best;
  };

  std::vector<std::int64_t> counts(k_classes, 0);
  double eps = 0.0;
  // j = 1 has zero gaps; include it for completeness of the window condition.
  for (std::int64_t j = 1; j <= n; ++j) {
    if (j >= 2) {
      double gap = x[static_cast<std::size_t>(j - 1)] - x[static_cast<std::size_t>(j - 2)];
      counts[class_of(gap)]++;
    }
    for (std::size_t c = 0; c < k_classes; ++c) {
      double expected = static_cast<double>(rep.spectrum.multiplicities[c]) /
                        static_cast<double>(n) * static_cast<double>(j);
      eps = std::max(eps, std::abs(static_cast<double>(counts[c]) - expected));
    }
  }

  double l_max = rep.spectrum.lengths.back();
  rep.r = static_cast<double>(n) * l_max - 2.0;
  rep.epsilon = eps;
  double sum_lengths = 0.0;
  for (double l : rep.spectrum.lengths) sum_lengths += l;
  rep.bound = (rep.r + 3.0) / static_cast<double>(n) + eps * sum_lengths;
  rep.measured_star = star_discrepancy_1d(ps).star;
  rep.satisfied = rep.measured_star <= rep.bound;
  return rep;
}

PcBoundReport pc_based_bound(const PointSet& ps, double alpha, std::int64_t k_override) {
  if (ps.dimension != 1) throw Error(ErrorCode::invalid_argument, "pc_based_bound: d = 1 only");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error(ErrorCode::invalid_argument, "pc_based_bound: alpha must be in (0, 1]");

  PcBoundReport rep;
  rep.n = ps.n;
  rep.alpha = alpha;

  const double nd = static_cast<double>(ps.n);
  double k_upper = std::pow(nd, 0.4 * alpha);
  std::int64_t k = k_override > 0 ? k_override : static_cast<std::int64_t>(std::floor(k_upper));
  if (k < 1) k = 1;
  if (k_override > 0 &&
      !(static_cast<double>(k_override) >= 0.5 * k_upper - 1e-12 &&
        static_cast<double>(k_override) <= k_upper + 1e-12))
    throw Error(ErrorCode::invalid_argument,
                "pc_based_bound: K outside the window [N^{2a/5}/2, N^{2a/5}]");
  rep.k = k;

  if (k * k > ps.n / 2) {
    // Find the smallest N for which floor(N^{2a/5})^2 <= N/2.
    std::int64_t n_min = ps.n;
    while (true) {
      std::int64_t kk = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(n_min), 0.4 * alpha)));
      if (kk * kk <= n_min / 2) break;
      n_min *= 2;
    }
    throw Error(ErrorCode::budget,
                "pc_based_bound: K^2 > N/2 at this alpha; need N >= about " + std::to_string(n_min));
  }

  rep.f_value = deviation_statistic(ps, k * k, alpha).value;
  double n_alpha = std::pow(nd, alpha);
  rep.bound = 5.0 * std::max(std::pow(nd, 1.0 - alpha / 5.0), std::sqrt(n_alpha * rep.f_value));
  rep.measured = n_alpha * star_discrepancy_1d(ps).star;
  rep.satisfied = rep.measured <= rep.bound;
  return rep;
}

}  // namespace lowdisc
