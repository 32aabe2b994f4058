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

#include "pair_correlation.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "errors.hpp"
#include "support/oracles.hpp"

using namespace lowdisc;

TEST_CASE("two antipodal points at the boundary radius") {
  PointSet ps = pointset_from_values({0.0, 0.5});
  CHECK(pair_count(ps, 0.5, false) == 2);
  CHECK(pair_count(ps, 0.5, true) == 0);
}

TEST_CASE("fast counting equals the naive loop on the phi sequence") {
  PointSet ps = generate(make_kronecker({"phi"}), 100);
  CHECK(pair_count(ps, 0.003, false) == oracles::naive_pair_count(ps, 0.003, false));
  CHECK(pair_count(ps, 0.003, true) == oracles::naive_pair_count(ps, 0.003, true));
}

TEST_CASE("fast counting equals the naive loop on random instances in d <= 3") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 1 + trial % 3;
    std::int64_t n = 20 + static_cast<std::int64_t>(oracles::random_unit(rng) * 380);
    PointSet ps = oracles::random_points(rng, n, d);
    double radius = std::pow(10.0, -3.0 * oracles::random_unit(rng));
    bool strict = trial % 2 == 0;
    CHECK(pair_count(ps, radius, strict) == oracles::naive_pair_count(ps, radius, strict));
  }
}

TEST_CASE("pair counting is symmetric under reversal and rotation") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet ps = oracles::random_points(rng, 150, 1);
    double radius = 0.01 + 0.2 * oracles::random_unit(rng);
    std::int64_t base = pair_count(ps, radius, false);

    std::vector<double> reversed(ps.data.rbegin(), ps.data.rend());
    CHECK(pair_count(pointset_from_values(reversed), radius, false) == base);

    double c = oracles::random_unit(rng);
    std::vector<double> rotated(ps.data);
    for (double& x : rotated) {
      x += c;
      if (x >= 1.0) x -= 1.0;
    }
    std::int64_t rotated_count = pair_count(pointset_from_values(rotated), radius, false);
    // Rotation moves pairs across the comparison boundary only by rounding.
    CHECK(std::abs(rotated_count - base) <= 2);
  }
}

TEST_CASE("pair count is monotone in the radius") {
  std::mt19937_64 rng(41);
  PointSet ps = oracles::random_points(rng, 500, 1);
  double prev = -1;
  std::int64_t prev_count = 0;
  for (double r : {0.0, 1e-4, 1e-3, 1e-2, 0.1, 0.4, 0.5, 0.7}) {
    std::int64_t count = pair_count(ps, r, false);
    if (prev >= 0) CHECK(count >= prev_count);
    prev = r;
    prev_count = count;
  }
  CHECK(pair_count(ps, 0.5, false) == 500 * 499);
  CHECK(pair_count(ps, 0.7, true) == 500 * 499);
}

TEST_CASE("pair correlation value on the two-point and equispaced fixtures") {
  PairCorrelationPoint two = pair_correlation(pointset_from_values({0.0, 0.5}), 1.0, 1.0);
  CHECK(two.raw_count == 2);
  CHECK(two.ball_volume == doctest::Approx(1.0));
  CHECK(two.value == doctest::Approx(0.5));
  CHECK(two.saturated);

  std::vector<double> eq(100);
  for (int i = 0; i < 100; ++i) eq[static_cast<std::size_t>(i)] = i / 100.0;
  PairCorrelationPoint p = pair_correlation(pointset_from_values(eq), 1.5, 1.0);
  CHECK(p.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK_FALSE(p.saturated);
  // d = 1, alpha = 1 consistency: value = (raw/N) / (2s)
  CHECK(p.value == doctest::Approx(static_cast<double>(p.raw_count) / 100.0 / (2.0 * 1.5)));
}

TEST_CASE("pair correlation validates its arguments") {
  PointSet ps = pointset_from_values({0.1, 0.2, 0.4});
  CHECK_THROWS_AS(pair_correlation(ps, 0.0, 1.0), Error);
  CHECK_THROWS_AS(pair_correlation(ps, 1.0, 0.0), Error);
  CHECK_THROWS_AS(pair_correlation(ps, 1.0, 1.1), Error);
  PointSet ps2 = generate(make_random(3, 2), 16);
  CHECK_THROWS_AS(pair_correlation(ps2, 1.0, 0.9), Error);  // alpha > 1/d
  CHECK_NOTHROW(pair_correlation(ps2, 1.0, 0.5));
}

TEST_CASE("deviation statistic on fixtures") {
  // Dyadic spacing keeps distances and thresholds exact, so "no pair strictly
  // below the first threshold" holds literally and the value is exactly N.
  std::vector<double> eq(16);
  for (int i = 0; i < 16; ++i) eq[static_cast<std::size_t>(i)] = i / 16.0;
  DeviationStatistic dev = deviation_statistic(pointset_from_values(eq), 1, 1.0);
  CHECK(dev.value == doctest::Approx(16.0));

  DeviationStatistic single = deviation_statistic(pointset_from_values({0.42}), 1, 0.7);
  CHECK(single.value == doctest::Approx(1.0));  // N^{2-alpha} with no pairs

  CHECK_THROWS_AS(deviation_statistic(pointset_from_values(eq), 9, 1.0), Error);  // K > N/2
  CHECK_THROWS_AS(deviation_statistic(pointset_from_values(eq), 0, 1.0), Error);
}

TEST_CASE("deviation statistic equals the naive oracle") {
  PointSet phi = generate(make_kronecker({"phi"}), 1000);
  CHECK(deviation_statistic(phi, 10, 0.8).value == oracles::naive_deviation(phi, 10, 0.8));

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    std::int64_t n = 60 + static_cast<std::int64_t>(oracles::random_unit(rng) * 400);
    PointSet ps = oracles::random_points(rng, n, 1);
    std::int64_t k = 1 + static_cast<std::int64_t>(oracles::random_unit(rng) * (n / 2 - 1));
    double alpha = 0.5 + 0.5 * oracles::random_unit(rng);
    CHECK(deviation_statistic(ps, k, alpha).value == oracles::naive_deviation(ps, k, alpha));
  }
}

TEST_CASE("deviation statistic is monotone in K") {
  std::mt19937_64 rng(47);
  PointSet ps = oracles::random_points(rng, 600, 1);
  double prev = -1.0;
  for (std::int64_t k : {1, 2, 5, 20, 80, 300}) {
    double v = deviation_statistic(ps, k, 0.9).value;
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("equispaced points maximize the deviation at s = 1") {
  std::vector<double> eq(64);
  for (int i = 0; i < 64; ++i) eq[static_cast<std::size_t>(i)] = i / 64.0;
  DeviationStatistic dev = deviation_statistic(pointset_from_values(eq), 32, 1.0);
  CHECK(dev.value == doctest::Approx(64.0));  // count deficit N at s=1
  CHECK(dev.argmax_s == 1);
}

TEST_CASE("number variance curve reports fits per s") {
  NumberVarianceCurve curve =
      number_variance_curve(make_kronecker({"phi"}), 0.8, {0.5, 1.0}, {100, 200, 400, 800});
  CHECK(curve.table.size() == 8);
  REQUIRE(curve.fits.size() == 2);
  for (const auto& fit : curve.fits) CHECK(fit.points_used >= 3);
  CHECK_THROWS_AS(number_variance_curve(make_vdc(2), 0.8, {1.0}, {100, 50}), Error);
}

TEST_CASE("phi-Kronecker has value zero at s=1/2, alpha=1 on Fibonacci N") {
  for (std::int64_t n : {55, 89, 144, 233, 377, 610, 987}) {
    PairCorrelationPoint p = pair_correlation(generate(make_kronecker({"phi"}), n), 0.5, 1.0);
    CHECK(p.raw_count == 0);
    CHECK(p.value == 0.0);
  }
}
