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

#include <doctest.h>

#include <cmath>
#include <random>

#include "errors.hpp"
#include "support/oracles.hpp"

using namespace lowdisc;

TEST_CASE("star discrepancy of fixtures") {
  CHECK(star_discrepancy_1d(pointset_from_values({0.5})).star == doctest::Approx(0.5));
  CHECK(star_discrepancy_1d(pointset_from_values({0.25, 0.75})).star == doctest::Approx(0.25));
}

TEST_CASE("star discrepancy equals the critical-point oracle") {
  PointSet phi5 = generate(make_kronecker({"phi"}), 5);
  CHECK(star_discrepancy_1d(phi5).star ==
        doctest::Approx(oracles::naive_star_discrepancy_1d(phi5.data)).epsilon(1e-14));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    std::int64_t n = 1 + static_cast<std::int64_t>(oracles::random_unit(rng) * 300);
    PointSet ps = oracles::random_points(rng, n, 1);
    double fast = star_discrepancy_1d(ps).star;
    double oracle = oracles::naive_star_discrepancy_1d(ps.data);
    CHECK(std::abs(fast - oracle) <= 1e-14);
  }
}

TEST_CASE("the star witness reproduces its deviation") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet ps = oracles::random_points(rng, 50, 1);
    DiscrepancyReport rep = star_discrepancy_1d(ps);
    REQUIRE(rep.witness_b.size() == 1);
    double b = rep.witness_b[0];
    std::int64_t count = 0;
    for (double x : ps.data) count += rep.witness_closed ? x <= b : x < b;
    double dev = static_cast<double>(count) / static_cast<double>(ps.n) - b;
    CHECK(dev == doctest::Approx(rep.witness_deviation).epsilon(1e-12));
    CHECK(std::abs(dev) == doctest::Approx(rep.star).epsilon(1e-12));
  }
}

TEST_CASE("reflection leaves the star discrepancy unchanged") {
  std::mt19937_64 rng(61);
  // Power-of-two sizes on a dyadic grid keep every term of the closed form
  // exact, so equality is bitwise there.
  for (std::int64_t n : {2, 4, 8, 16, 32, 64}) {
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (auto& x : pts) x = static_cast<double>(1 + rng() % 1023) / 1024.0;
    std::vector<double> reflected(pts);
    for (double& x : reflected) x = 1.0 - x;
    double a = star_discrepancy_1d(pointset_from_values(pts)).star;
    double b = star_discrepancy_1d(pointset_from_values(reflected)).star;
    CHECK(a == b);
  }
  // General reals: equality up to the rounding of 1 - x.
  for (int trial = 0; trial < 20; ++trial) {
    std::int64_t n = 1 + static_cast<std::int64_t>(oracles::random_unit(rng) * 200);
    PointSet ps = oracles::random_points(rng, n, 1);
    std::vector<double> reflected(ps.data);
    for (double& x : reflected) x = x == 0.0 ? 0.0 : 1.0 - x;
    CHECK(star_discrepancy_1d(ps).star ==
          doctest::Approx(star_discrepancy_1d(pointset_from_values(reflected)).star)
              .epsilon(1e-13));
  }
}

TEST_CASE("discrepancy is invariant under permutation of the input") {
  std::mt19937_64 rng(67);
  PointSet ps = oracles::random_points(rng, 120, 1);
  std::vector<double> shuffled(ps.data);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(star_discrepancy_1d(ps).star ==
        star_discrepancy_1d(pointset_from_values(shuffled)).star);
  CHECK(extreme_discrepancy_1d(ps) == extreme_discrepancy_1d(pointset_from_values(shuffled)));
}

TEST_CASE("extreme discrepancy matches the interval oracle") {
  // The closed form must agree with the brute-force sup over all intervals,
  // including the one-point set where the sup is 1.
  CHECK(extreme_discrepancy_1d(pointset_from_values({0.5})) == doctest::Approx(1.0));
  CHECK(oracles::naive_extreme_discrepancy_1d({0.5}) == doctest::Approx(1.0));
  CHECK(extreme_discrepancy_1d(pointset_from_values({0.25, 0.75})) == doctest::Approx(0.5));

  std::vector<double> shifted(8);
  for (int i = 0; i < 8; ++i) shifted[static_cast<std::size_t>(i)] = (i + 0.5) / 8.0;
  CHECK(extreme_discrepancy_1d(pointset_from_values(shifted)) == doctest::Approx(1.0 / 8.0));

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    std::int64_t n = 1 + static_cast<std::int64_t>(oracles::random_unit(rng) * 60);
    PointSet ps = oracles::random_points(rng, n, 1);
    CHECK(extreme_discrepancy_1d(ps) ==
          doctest::Approx(oracles::naive_extreme_discrepancy_1d(ps.data)).epsilon(1e-13));
  }
}

TEST_CASE("star <= extreme <= 2 star in one dimension") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    std::int64_t n = 1 + static_cast<std::int64_t>(oracles::random_unit(rng) * 400);
    PointSet ps = oracles::random_points(rng, n, 1);
    DiscrepancyReport rep = star_discrepancy_1d(ps);
    REQUIRE(rep.extreme.has_value());
    CHECK(rep.star <= *rep.extreme + 1e-14);
    CHECK(*rep.extreme <= 2.0 * rep.star + 1e-14);
    CHECK(rep.star >= 1.0 / (2.0 * static_cast<double>(n)) - 1e-15);
    CHECK(rep.star <= 1.0);
  }
}

TEST_CASE("multi-d star discrepancy: single centered point") {
  DiscrepancyReport rep = star_discrepancy_md(pointset_from_values({0.5, 0.5}, 2));
  CHECK(rep.star == doctest::Approx(0.75));
  CHECK(rep.method == DiscrepancyMethod::grid_md);
}

TEST_CASE("multi-d star discrepancy: corner point pushes D* toward 1") {
  double eps = 1e-6;
  DiscrepancyReport rep = star_discrepancy_md(pointset_from_values({eps, eps}, 2));
  CHECK(rep.star > 1.0 - 1e-5);
}

TEST_CASE("multi-d star discrepancy equals the exhaustive oracle") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 25; ++trial) {
    int d = 2 + trial % 2;
    std::int64_t n = 2 + static_cast<std::int64_t>(oracles::random_unit(rng) * 22);
    PointSet ps = oracles::random_points(rng, n, d);
    CHECK(star_discrepancy_md(ps).star ==
          doctest::Approx(oracles::naive_star_discrepancy_md(ps)).epsilon(1e-13));
  }
}

TEST_CASE("random-box probe never exceeds the exact value") {
  PointSet ps = generate(spec_parse("kronecker:sqrt2,sqrt3"), 500);
  DiscrepancyReport exact = star_discrepancy_md(ps);
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    double probe = star_discrepancy_lower_bound(ps, 2000, seed);
    CHECK(probe <= exact.star + 1e-15);
    CHECK(probe > 0.0);
  }
}

TEST_CASE("multi-d budget refusals carry a suggestion") {
  std::mt19937_64 rng(83);
  PointSet big2 = oracles::random_points(rng, 3001, 2);
  CHECK_THROWS_WITH_AS(star_discrepancy_md(big2), doctest::Contains("reduce N"), Error);
  PointSet big3 = oracles::random_points(rng, 2000, 3);
  CHECK_THROWS_AS(star_discrepancy_md(big3), Error);
  PointSet d4 = oracles::random_points(rng, 10, 4);
  CHECK_THROWS_AS(star_discrepancy_md(d4), Error);
}

TEST_CASE("gap-based bound on equispaced points matches the worked example") {
  std::int64_t n = 20;
  std::vector<double> eq(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    eq[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(n);
  GapBoundReport rep = gap_based_bound(pointset_from_values(eq));
  CHECK(rep.spectrum.distinct() == 1);
  CHECK(rep.r == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(rep.epsilon == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.bound == doctest::Approx(3.0 / static_cast<double>(n)).epsilon(1e-9));
  CHECK(rep.measured_star == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-12));
  CHECK(rep.satisfied);
}

TEST_CASE("gap-based bound holds for van der Corput and phi") {
  GapBoundReport vdc = gap_based_bound(generate(make_vdc(2), 1024));
  CHECK(vdc.satisfied);
  CHECK(vdc.bound <= 12.0 * std::log2(1024.0) / 1024.0);  // O(log N / N) scale
  GapBoundReport phi = gap_based_bound(generate(make_kronecker({"phi"}), 10000));
  CHECK(phi.satisfied);
}

TEST_CASE("gap-based bound refuses effectively infinite gap structure") {
  std::mt19937_64 rng(89);
  PointSet ps = oracles::random_points(rng, 2000, 1);
  CHECK_THROWS_AS(gap_based_bound(ps), Error);
}

TEST_CASE("pc-based bound: phi satisfied, equispaced loose but satisfied") {
  PcBoundReport phi = pc_based_bound(generate(make_kronecker({"phi"}), 10000), 0.8);
  CHECK(phi.satisfied);
  CHECK(phi.k == static_cast<std::int64_t>(std::floor(std::pow(10000.0, 0.32))));

  std::int64_t n = 512;  // dyadic spacing keeps distances and thresholds exact
  std::vector<double> eq(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    eq[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(n);
  PcBoundReport lattice = pc_based_bound(pointset_from_values(eq), 1.0);
  CHECK(lattice.f_value == doctest::Approx(static_cast<double>(n)));  // deficit N per s
  CHECK(lattice.satisfied);
}

TEST_CASE("pc-based bound window and size checks") {
  PointSet tiny = generate(make_kronecker({"phi"}), 6);
  CHECK_THROWS_WITH_AS(pc_based_bound(tiny, 1.0), doctest::Contains("need N"), Error);
  PointSet ps = generate(make_kronecker({"phi"}), 10000);
  CHECK_THROWS_AS(pc_based_bound(ps, 1.0, 200), Error);   // outside the window
  CHECK_NOTHROW(pc_based_bound(ps, 1.0, 30));             // inside [K/2, K]
}
