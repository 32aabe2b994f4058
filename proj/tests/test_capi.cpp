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

// Exercises the shared-library surface strictly through the public C header.

#include <lowdisc/lowdisc.h>

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  lowdisc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error text are always available") {
  CHECK(lowdisc_version() != nullptr);
  CHECK(lowdisc_last_error() != nullptr);
}

TEST_CASE("spec parse, format, and errors") {
  lowdisc_spec* spec = nullptr;
  REQUIRE(lowdisc_spec_parse("kronecker:phi", &spec) == LOWDISC_OK);
  char* text = nullptr;
  REQUIRE(lowdisc_spec_format(spec, &text) == LOWDISC_OK);
  CHECK(take(text) == "kronecker:phi");
  CHECK(lowdisc_spec_near_rational(spec) == 0);
  lowdisc_spec_free(spec);

  lowdisc_spec* bad = nullptr;
  CHECK(lowdisc_spec_parse("kronecker:tau", &bad) == LOWDISC_EINVAL);
  CHECK(std::strlen(lowdisc_last_error()) > 0);

  lowdisc_spec* rational = nullptr;
  REQUIRE(lowdisc_spec_parse("kronecker:z=0.5", &rational) == LOWDISC_OK);
  CHECK(lowdisc_spec_near_rational(rational) == 1);
  lowdisc_spec_free(rational);
}

TEST_CASE("generate and point access through handles") {
  lowdisc_spec* spec = nullptr;
  REQUIRE(lowdisc_spec_parse("vdc:b=2", &spec) == LOWDISC_OK);
  lowdisc_points* ps = nullptr;
  REQUIRE(lowdisc_generate(spec, 4, &ps) == LOWDISC_OK);
  CHECK(lowdisc_points_size(ps) == 4);
  CHECK(lowdisc_points_dimension(ps) == 1);
  double x = 0.0;
  REQUIRE(lowdisc_points_get(ps, 2, &x) == LOWDISC_OK);
  CHECK(x == 0.75);
  CHECK(lowdisc_points_get(ps, 9, &x) == LOWDISC_EINVAL);

  lowdisc_points* sorted = nullptr;
  REQUIRE(lowdisc_points_sort(ps, &sorted) == LOWDISC_OK);
  REQUIRE(lowdisc_points_get(sorted, 0, &x) == LOWDISC_OK);
  CHECK(x == 0.125);

  char* csv = nullptr;
  REQUIRE(lowdisc_points_csv(ps, &csv) == LOWDISC_OK);
  CHECK(take(csv).rfind("x1\n0.5\n0.25\n0.75\n0.125\n", 0) == 0);

  lowdisc_points_free(sorted);
  lowdisc_points_free(ps);
  lowdisc_spec_free(spec);
}

TEST_CASE("points can be built from raw coordinates") {
  const double coords[] = {0.0, 0.25, 0.5, 0.75};
  lowdisc_points* ps = nullptr;
  REQUIRE(lowdisc_points_create(coords, 4, 1, &ps) == LOWDISC_OK);
  lowdisc_gaps* gaps = nullptr;
  REQUIRE(lowdisc_gaps_compute(ps, 1e-9, &gaps) == LOWDISC_OK);
  CHECK(lowdisc_gaps_count(gaps) == 1);
  double length = 0.0;
  int64_t mult = 0;
  REQUIRE(lowdisc_gaps_get(gaps, 0, &length, &mult) == LOWDISC_OK);
  CHECK(length == doctest::Approx(0.25));
  CHECK(mult == 4);
  CHECK(lowdisc_gaps_has_duplicates(gaps) == 0);
  lowdisc_gaps_free(gaps);
  lowdisc_points_free(ps);

  const double bad[] = {0.5, 1.5};
  lowdisc_points* nope = nullptr;
  CHECK(lowdisc_points_create(bad, 2, 1, &nope) == LOWDISC_EDOMAIN);
}

TEST_CASE("continued fraction handles expose digits and convergents") {
  lowdisc_cf* cf = nullptr;
  REQUIRE(lowdisc_cf_named("phi", 7, &cf) == LOWDISC_OK);
  CHECK(lowdisc_cf_terms(cf) == 7);
  int64_t digit = 0, p = 0, q = 0;
  REQUIRE(lowdisc_cf_digit(cf, 3, &digit) == LOWDISC_OK);
  CHECK(digit == 1);
  REQUIRE(lowdisc_cf_convergent(cf, 6, &p, &q) == LOWDISC_OK);
  CHECK(q == 13);
  CHECK(lowdisc_cf_terminated(cf) == 0);

  int64_t digits[16] = {0};
  int32_t len = 0;
  REQUIRE(lowdisc_ostrowski(cf, 7, digits, &len) == LOWDISC_OK);
  REQUIRE(len >= 5);
  CHECK(digits[4] == 1);  // 7 = q_4 + q_2 = 5 + 2
  CHECK(digits[2] == 1);
  lowdisc_cf_free(cf);

  lowdisc_cf* rational = nullptr;
  REQUIRE(lowdisc_cf_expand(0.25, 8, 0.0, &rational) == LOWDISC_OK);
  CHECK(lowdisc_cf_terminated(rational) == 1);
  lowdisc_cf_free(rational);

  lowdisc_cf* invalid = nullptr;
  CHECK(lowdisc_cf_expand(NAN, 8, 0.0, &invalid) == LOWDISC_EDOMAIN);
}

TEST_CASE("three-gap prediction struct mirrors the core result") {
  lowdisc_spec* spec = nullptr;
  REQUIRE(lowdisc_spec_parse("kronecker:phi", &spec) == LOWDISC_OK);
  lowdisc_three_gap_prediction pred{};
  REQUIRE(lowdisc_three_gap_predict(spec, 4, &pred) == LOWDISC_OK);
  CHECK(pred.l3 == doctest::Approx(pred.l1 + pred.l2));
  CHECK(pred.n1 + pred.n2 + pred.n3 == 4);
  CHECK(pred.degenerate == 0);
  lowdisc_spec_free(spec);
}

TEST_CASE("pair correlation, deviation, and discrepancy through the C API") {
  const double coords[] = {0.0, 0.5};
  lowdisc_points* ps = nullptr;
  REQUIRE(lowdisc_points_create(coords, 2, 1, &ps) == LOWDISC_OK);

  int64_t count = -1;
  REQUIRE(lowdisc_pair_count(ps, 0.5, 0, &count) == LOWDISC_OK);
  CHECK(count == 2);

  lowdisc_pc_point pc{};
  REQUIRE(lowdisc_pair_correlation(ps, 1.0, 1.0, 0, &pc) == LOWDISC_OK);
  CHECK(pc.value == doctest::Approx(0.5));
  CHECK(pc.saturated == 1);

  double f = 0.0;
  REQUIRE(lowdisc_deviation_statistic(ps, 1, 1.0, &f) == LOWDISC_OK);

  lowdisc_disc_report disc{};
  REQUIRE(lowdisc_star_discrepancy(ps, &disc) == LOWDISC_OK);
  CHECK(disc.star == doctest::Approx(0.5));  // the closed box [0, 0.5] holds both points
  CHECK(!std::isnan(disc.extreme));

  double extreme = 0.0;
  REQUIRE(lowdisc_extreme_discrepancy_1d(ps, &extreme) == LOWDISC_OK);
  CHECK(extreme == doctest::Approx(0.5));
  lowdisc_points_free(ps);
}

TEST_CASE("budget and domain errors surface through status codes") {
  lowdisc_spec* spec = nullptr;
  REQUIRE(lowdisc_spec_parse("random:seed=1,d=3", &spec) == LOWDISC_OK);
  lowdisc_points* ps = nullptr;
  REQUIRE(lowdisc_generate(spec, 2000, &ps) == LOWDISC_OK);
  lowdisc_disc_report disc{};
  CHECK(lowdisc_star_discrepancy(ps, &disc) == LOWDISC_EBUDGET);
  double probe = 0.0;
  REQUIRE(lowdisc_star_discrepancy_lower_bound(ps, 100, 7, &probe) == LOWDISC_OK);
  CHECK(probe > 0.0);
  lowdisc_points_free(ps);
  lowdisc_spec_free(spec);

  lowdisc_spec* rnd = nullptr;
  REQUIRE(lowdisc_spec_parse("random:seed=3", &rnd) == LOWDISC_OK);
  lowdisc_points* rps = nullptr;
  REQUIRE(lowdisc_generate(rnd, 2000, &rps) == LOWDISC_OK);
  lowdisc_gap_bound_report gb{};
  CHECK(lowdisc_gap_bound(rps, &gb) == LOWDISC_EDOMAIN);
  lowdisc_points_free(rps);
  lowdisc_spec_free(rnd);
}

TEST_CASE("pc bound report through the C API") {
  lowdisc_spec* spec = nullptr;
  REQUIRE(lowdisc_spec_parse("kronecker:phi", &spec) == LOWDISC_OK);
  lowdisc_points* ps = nullptr;
  REQUIRE(lowdisc_generate(spec, 4096, &ps) == LOWDISC_OK);
  lowdisc_pc_bound_report rep{};
  REQUIRE(lowdisc_pc_bound(ps, 0.8, 0, &rep) == LOWDISC_OK);
  CHECK(rep.satisfied == 1);
  CHECK(rep.k >= 1);
  lowdisc_points_free(ps);
  lowdisc_spec_free(spec);
}

TEST_CASE("classification and obstruction JSON endpoints") {
  lowdisc_spec* spec = nullptr;
  REQUIRE(lowdisc_spec_parse("kronecker:phi", &spec) == LOWDISC_OK);
  const int64_t ns[] = {55, 89, 144, 233, 377};
  char* json = nullptr;
  REQUIRE(lowdisc_classify_gaps(spec, 1.0, ns, 5, &json) == LOWDISC_OK);
  std::string doc = take(json);
  CHECK(doc.find("\"rank_matched\": true") != std::string::npos);
  CHECK(doc.find("alpha_intermediate") != std::string::npos);

  REQUIRE(lowdisc_check_obstructions(spec, 1.0, ns, 5, &json) == LOWDISC_OK);
  CHECK(take(json).find("\"obstruction1\": \"indicated\"") != std::string::npos);
  lowdisc_spec_free(spec);
}

TEST_CASE("config canonicalization and N grammar through the C API") {
  char* canon = nullptr;
  REQUIRE(lowdisc_config_canonical(R"({"alpha": 0.8})", &canon) == LOWDISC_OK);
  std::string text = take(canon);
  CHECK(text.find("\"alpha\": 0.8") != std::string::npos);
  CHECK(text.find("\"format\": \"csv\"") != std::string::npos);
  CHECK(lowdisc_config_canonical("{oops", &canon) == LOWDISC_EINVAL);

  int64_t ns[8] = {0};
  int32_t count = 0;
  REQUIRE(lowdisc_parse_n("10:1000:3", ns, 8, &count) == LOWDISC_OK);
  CHECK(count == 3);
  CHECK(ns[0] == 10);
  CHECK(ns[2] == 1000);
  CHECK(lowdisc_parse_n("10:1000:30", ns, 8, &count) == LOWDISC_EINVAL);
}

TEST_CASE("verify runs a small suite and renders CSV") {
  char* json = nullptr;
  int32_t failures = -1, inconclusive = -1;
  REQUIRE(lowdisc_verify_run("ppc_failure", R"({"max_n": 300})", &json, &failures,
                             &inconclusive) == LOWDISC_OK);
  std::string doc = take(json);
  CHECK(failures == 0);
  CHECK(doc.find("\"suite\": \"ppc_failure\"") != std::string::npos);

  REQUIRE(lowdisc_verify_run("ppc_failure", R"({"max_n": 300})", &json, nullptr, nullptr) ==
          LOWDISC_OK);
  std::string doc2 = take(json);
  CHECK(doc == doc2);  // reproducible bytes

  char* csv = nullptr;
  REQUIRE(lowdisc_verify_render_csv(doc.c_str(), &csv) == LOWDISC_OK);
  std::string rendered = take(csv);
  CHECK(rendered.rfind("suite,case,status,margin,detail\n", 0) == 0);
  CHECK(rendered.find("ppc_failure") != std::string::npos);

  CHECK(lowdisc_verify_run("bogus_suite", "{}", &json, nullptr, nullptr) == LOWDISC_EINVAL);
  CHECK(lowdisc_verify_render_csv("{\"no\": 1}", &csv) == LOWDISC_EINVAL);
}

TEST_CASE("torus norm helper") {
  CHECK(lowdisc_torus_norm(0.75) == doctest::Approx(0.25));
  CHECK(std::isnan(lowdisc_torus_norm(NAN)));
}
