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

#include <doctest.h>

#include <cmath>
#include <random>

#include "errors.hpp"
#include "support/oracles.hpp"

using namespace lowdisc;

TEST_CASE("equispaced points have one gap length with full multiplicity") {
  GapSpectrum gs = gap_spectrum(pointset_from_values({0.0, 0.25, 0.5, 0.75}));
  REQUIRE(gs.distinct() == 1);
  CHECK(gs.lengths[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(gs.multiplicities[0] == 4);
}

TEST_CASE("the wraparound gap is counted") {
  GapSpectrum gs = gap_spectrum(pointset_from_values({0.0, 0.5}));
  REQUIRE(gs.distinct() == 1);
  CHECK(gs.lengths[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gs.multiplicities[0] == 2);
}

TEST_CASE("phi at N=5 has two gap lengths given by convergent norms") {
  CfExpansion cf = cf_named("phi", 20);
  GapSpectrum gs = gap_spectrum(generate(make_kronecker({"phi"}), 5));
  REQUIRE(gs.distinct() == 2);
  // ||q_3 phi|| = ||3 phi|| and the larger one eta_2 = ||2 phi||.
  CHECK(gs.lengths[0] ==
        doctest::Approx(dd_to_double(torus_norm_of_multiple(cf.value, 3))).epsilon(1e-12));
  CHECK(gs.lengths[1] ==
        doctest::Approx(dd_to_double(torus_norm_of_multiple(cf.value, 2))).epsilon(1e-12));
}

TEST_CASE("duplicate points are reported as a flagged zero-length class") {
  GapSpectrum gs = gap_spectrum(pointset_from_values({0.3, 0.3, 0.7}));
  CHECK(gs.has_duplicates);
  CHECK(gs.lengths.front() <= gs.grouping_tolerance);
}

TEST_CASE("gap spectrum invariants: rotation invariance and mass one") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::int64_t n = 2 + static_cast<std::int64_t>(oracles::random_unit(rng) * 200);
    PointSet ps = oracles::random_points(rng, n, 1);
    GapSpectrum gs = gap_spectrum(ps);

    double mass = 0.0;
    std::int64_t count = 0;
    for (std::size_t k = 0; k < gs.distinct(); ++k) {
      mass += gs.lengths[k] * static_cast<double>(gs.multiplicities[k]);
      count += gs.multiplicities[k];
    }
    CHECK(count == n);
    CHECK(std::abs(mass - 1.0) <=
          10.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon());

    double c = oracles::random_unit(rng);
    std::vector<double> rotated(ps.data);
    for (double& x : rotated) {
      x += c;
      if (x >= 1.0) x -= 1.0;
    }
    GapSpectrum rot = gap_spectrum(pointset_from_values(rotated));
    REQUIRE(rot.distinct() == gs.distinct());
    for (std::size_t k = 0; k < gs.distinct(); ++k) {
      CHECK(rot.lengths[k] == doctest::Approx(gs.lengths[k]).epsilon(1e-9));
      CHECK(rot.multiplicities[k] == gs.multiplicities[k]);
    }
  }
}

TEST_CASE("three-gap prediction: Fibonacci N gives two lengths") {
  CfExpansion cf = cf_named("phi", 25);
  for (std::size_t k = 3; k < 12; ++k) {
    std::int64_t q = cf.convergents[k].second;
    ThreeGapPrediction pred = three_gap_predict(cf, q);
    auto spec = predicted_spectrum(pred);
    CHECK(spec.size() == 2);  // one of the three counts degenerates to zero
    GapSpectrum emp = gap_spectrum(generate(make_kronecker({"phi"}), q));
    ThreeGapComparison cmp = three_gap_compare(pred, emp);
    INFO(cmp.diagnostic);
    CHECK(cmp.matched);
  }
}

TEST_CASE("three-gap prediction: N=4 has three lengths, largest is the sum") {
  CfExpansion cf = cf_named("phi", 20);
  ThreeGapPrediction pred = three_gap_predict(cf, 4);
  CHECK(pred.n1 > 0);
  CHECK(pred.n2 > 0);
  CHECK(pred.n3 > 0);
  CHECK(pred.l3 == doctest::Approx(pred.l1 + pred.l2).epsilon(1e-15));
  CHECK(pred.n1 + pred.n2 + pred.n3 == 4);
  GapSpectrum emp = gap_spectrum(generate(make_kronecker({"phi"}), 4));
  REQUIRE(emp.distinct() == 3);
  CHECK(emp.lengths[2] == doctest::Approx(emp.lengths[0] + emp.lengths[1]).epsilon(1e-12));
  ThreeGapComparison cmp = three_gap_compare(pred, emp);
  INFO(cmp.diagnostic);
  CHECK(cmp.matched);
}

TEST_CASE("three-gap prediction: N=1 is the degenerate full circle") {
  CfExpansion cf = cf_named("phi", 10);
  ThreeGapPrediction pred = three_gap_predict(cf, 1);
  CHECK(pred.degenerate);
  auto spec = predicted_spectrum(pred);
  REQUIRE(spec.size() == 1);
  CHECK(spec[0].first == doctest::Approx(1.0));
  CHECK(spec[0].second == 1);
}

TEST_CASE("three-gap prediction matches the brute-force spectrum across N and z") {
  std::mt19937_64 rng(23);
  std::vector<CfExpansion> cfs = {cf_named("phi", 40), cf_named("sqrt2", 40)};
  for (int t = 0; t < 6; ++t) {
    double hi;
    do {
      hi = oracles::random_unit(rng);
    } while (hi < 1e-3 || hi > 1.0 - 1e-3);
    DdReal z = dd_add(dd_from(hi), dd_from((oracles::random_unit(rng) - 0.5) * hi * 0x1.0p-52));
    CfExpansion cf = cf_expand_dd(z, 60, 0.0, 0x1.0p-105);
    if (cf.convergents.back().second > 3000) cfs.push_back(std::move(cf));
  }
  for (const auto& cf : cfs) {
    SequenceSpec spec = make_kronecker_z({cf.value}, true);
    PointSet all = generate(spec, 2500);
    for (std::int64_t n = 2; n <= 2500; n = n < 40 ? n + 1 : n + 37) {
      PointSet prefix;
      prefix.dimension = 1;
      prefix.n = n;
      prefix.data.assign(all.data.begin(), all.data.begin() + n);
      ThreeGapPrediction pred = three_gap_predict(cf, n);
      ThreeGapComparison cmp = three_gap_compare(pred, gap_spectrum(prefix), 1e-12);
      INFO(cmp.diagnostic);
      REQUIRE(cmp.matched);
    }
  }
}

TEST_CASE("the literal textbook N2 disagrees with the spectrum on borrow cases") {
  // sqrt2 at N = 11 exercises the digit-borrow shape where the uncorrected
  // multiplicity formula goes negative.
  CfExpansion cf = cf_named("sqrt2", 20);
  ThreeGapPrediction pred = three_gap_predict(cf, 11);
  CHECK(pred.n2 == 4);
  CHECK(pred.n2_literal < 0);
}

TEST_CASE("classification labels the golden-mean families per exponent") {
  std::vector<std::int64_t> fib;
  {
    CfExpansion cf = cf_named("phi", 40);
    for (auto& [p, q] : cf.convergents)
      if (q >= 55 && q <= 1'000'000 && (fib.empty() || q != fib.back())) fib.push_back(q);
  }
  SequenceSpec spec = make_kronecker({"phi"});

  GapClassification half = classify_gaps(spec, 0.5, fib);
  REQUIRE(half.families.size() == 2);
  CHECK(half.rank_matched);
  for (const auto& f : half.families) CHECK(f.label == GapLabel::alpha_small);

  GapClassification one = classify_gaps(spec, 1.0, fib);
  REQUIRE(one.families.size() == 2);
  CHECK(one.families.back().label == GapLabel::alpha_intermediate);
  CHECK(one.families.back().traj_min > 0.5);
  CHECK(one.families.back().traj_max < 2.0);
}

TEST_CASE("equispaced spectra classify as a single intermediate family at alpha 1") {
  std::vector<std::int64_t> ns = {100, 200, 400, 800};
  std::vector<GapSpectrum> spectra;
  for (std::int64_t n : ns) {
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
      pts[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(n);
    spectra.push_back(gap_spectrum(pointset_from_values(pts)));
  }
  GapClassification cls = classify_spectra(spectra, ns, 1.0);
  REQUIRE(cls.families.size() == 1);
  CHECK(cls.families[0].label == GapLabel::alpha_intermediate);
  CHECK(cls.families[0].traj_min == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cls.families[0].traj_max == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("classification needs at least four increasing N") {
  SequenceSpec spec = make_kronecker({"phi"});
  CHECK_THROWS_AS(classify_gaps(spec, 1.0, {10, 20, 30}), Error);
  CHECK_THROWS_AS(classify_gaps(spec, 1.0, {10, 20, 30, 25}), Error);
  CHECK_THROWS_AS(classify_gaps(spec, 1.5, {10, 20, 30, 40}), Error);
}

TEST_CASE("random points leave the obstruction check inconclusive") {
  ObstructionReport rep = check_obstructions(make_random(5), 1.0, {400, 800, 1600, 3200});
  CHECK(rep.obstruction1 == ObstructionStatus::inconclusive);
  CHECK(rep.obstruction2 == ObstructionStatus::inconclusive);
}

TEST_CASE("golden mean: obstruction 1 at alpha=1, neither at alpha=0.8") {
  std::vector<std::int64_t> fib;
  CfExpansion cf = cf_named("phi", 40);
  for (auto& [p, q] : cf.convergents)
    if (q >= 55 && q <= 1'000'000 && (fib.empty() || q != fib.back())) fib.push_back(q);
  SequenceSpec spec = make_kronecker({"phi"});

  ObstructionReport at1 = check_obstructions(spec, 1.0, fib);
  CHECK(at1.obstruction1 == ObstructionStatus::indicated);

  ObstructionReport at08 = check_obstructions(spec, 0.8, fib);
  CHECK(at08.obstruction1 == ObstructionStatus::not_indicated);
  CHECK(at08.obstruction2 == ObstructionStatus::not_indicated);
}
