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

#include <doctest.h>

#include <json.hpp>

#include <random>

#include "errors.hpp"
#include "experiment_config.hpp"
#include "verify.hpp"

using namespace lowdisc;

TEST_CASE("N grammar: single values and geometric grids") {
  CHECK(parse_n_grammar("200") == std::vector<std::int64_t>{200});
  auto grid = parse_n_grammar("1000:100000:5");
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == 1000);
  CHECK(grid.back() == 100000);
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
  CHECK(grid[2] == 10000);

  CHECK(parse_n_grammar("7:7:1") == std::vector<std::int64_t>{7});
  CHECK(parse_n_grammar("2:9:8").size() == 8);
  CHECK(parse_n_grammar("5:5:3") == std::vector<std::int64_t>{5});  // steps capped to the range
  CHECK(parse_n_grammar("2:4:9") == std::vector<std::int64_t>{2, 3, 4});

  CHECK_THROWS_AS(parse_n_grammar(""), Error);
  CHECK_THROWS_AS(parse_n_grammar("10:5:3"), Error);
  CHECK_THROWS_AS(parse_n_grammar("1:2"), Error);
  CHECK_THROWS_AS(parse_n_grammar("0"), Error);
  CHECK_THROWS_AS(parse_n_grammar("abc"), Error);
}

TEST_CASE("config JSON round-trips to a canonical form") {
  ExperimentConfig c;
  c.sequence = "kronecker:phi";
  c.n_list = {100, 1000, 10000};
  c.alpha = 0.8;
  c.s_values = {0.5, 1.0};
  c.format = "json";
  c.seed = 123456789;
  c.trials = 7;
  c.strict = true;
  std::string json = config_to_json(c);
  ExperimentConfig back = config_from_json(json);
  CHECK(back == c);
  CHECK(config_canonical(json) == json);
  CHECK(config_canonical(config_canonical("{}")) == config_canonical("{}"));
}

TEST_CASE("config accepts the n grammar and rejects unknown keys") {
  ExperimentConfig c = config_from_json(R"({"n": "10:1000:3", "alpha": 0.6})");
  CHECK(c.n_list == std::vector<std::int64_t>{10, 100, 1000});
  CHECK(c.alpha == 0.6);
  CHECK_THROWS_AS(config_from_json(R"({"bogus": 1})"), Error);
  CHECK_THROWS_AS(config_from_json(R"({"format": "xml"})"), Error);
  CHECK_THROWS_AS(config_from_json("not json"), Error);
}

TEST_CASE("suite results serialize with stable fields and re-parse bit for bit") {
  SuiteResult s;
  s.suite = "demo";
  CaseResult c;
  c.name = "case_a";
  c.status = CaseStatus::pass;
  c.margin = 0.1234567890123456789;
  c.detail = "quoted, \"detail\" with commas";
  s.cases.push_back(c);
  c.name = "case_b";
  c.status = CaseStatus::inconclusive;
  c.margin = -3.5e-13;
  s.cases.push_back(c);
  s.inconclusive = 1;

  std::string json = suites_to_json({s}, false);
  auto doc = nlohmann::json::parse(json);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["suites"][0]["suite"] == "demo");
  CHECK(doc["suites"][0]["cases"][0]["margin"].get<double>() == 0.1234567890123456789);
  CHECK(doc["suites"][0]["cases"][1]["margin"].get<double>() == -3.5e-13);
  CHECK(doc["failures"] == 0);
  CHECK(doc["inconclusive"] == 1);

  std::string csv = suites_to_csv({s}, false);
  CHECK(csv.rfind("suite,case,status,margin,detail\n", 0) == 0);
  CHECK(csv.find("\"quoted, \"\"detail\"\" with commas\"") != std::string::npos);
  // margins re-parse exactly from their 17-digit form
  auto pos = csv.find("case_a,pass,");
  REQUIRE(pos != std::string::npos);
  double parsed = std::strtod(csv.c_str() + pos + 12, nullptr);
  CHECK(parsed == 0.1234567890123456789);
}

TEST_CASE("identical configs give byte-identical suite results") {
  ExperimentConfig cfg;
  cfg.max_n = 300;
  cfg.trials = 4;
  SuiteResult a = run_suite("ppc_failure", cfg);
  SuiteResult b = run_suite("ppc_failure", cfg);
  CHECK(suites_to_json({a}, false) == suites_to_json({b}, false));
  CHECK(suites_to_csv({a}, false) == suites_to_csv({b}, false));
}

TEST_CASE("unknown suite ids are rejected, known ones listed") {
  CHECK(suite_ids().size() == 9);
  CHECK(is_suite_id("three_gap"));
  CHECK_FALSE(is_suite_id("nonsense"));
  CHECK_THROWS_AS(run_suite("nonsense", ExperimentConfig{}), Error);
}
