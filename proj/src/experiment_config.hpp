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

#ifndef LOWDISC_EXPERIMENT_CONFIG_HPP
#define LOWDISC_EXPERIMENT_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lowdisc {

/// Everything a run needs, mirrored one-to-one by the CLI flags and the JSON
/// config file. Parsing then printing yields a canonical form (stable key
/// order, all defaults materialized), and identical configs produce
/// byte-identical outputs.
struct ExperimentConfig {
  std::string sequence;             // sequence spec grammar; empty = suite default
  std::vector<std::int64_t> n_list; // from "<n>" or "<a>:<b>:<geomsteps>"
  double alpha = 1.0;
  std::vector<double> s_values;
  std::string output;               // output path; empty = subcommand default
  std::string format = "csv";       // csv | json
  std::uint64_t seed = 20260811;
  std::int64_t trials = 0;          // 0 = suite default
  std::int64_t max_n = 0;           // 0 = suite default
  std::int64_t deviation_k = 0;     // 0 = off / derived
  bool strict = false;              // strict (<) pair comparisons
  bool vdc_zeroth = false;          // prepend 0 to van der Corput output
  bool extended = false;            // treat user-supplied z as exact
  bool timings = false;             // include runtimes in emitted files

  bool operator==(const ExperimentConfig&) const = default;
};

/// "200" -> {200}; "1000:100000:5" -> 5 geometrically spaced values from
/// 1000 to 100000 inclusive (rounded, strictly increasing).
std::vector<std::int64_t> parse_n_grammar(const std::string& text);
std::string format_n_grammar(const std::vector<std::int64_t>& n_list);

ExperimentConfig config_from_json(const std::string& json_text);
std::string config_to_json(const ExperimentConfig& config);

/// parse + print: the canonical form of any valid config document.
std::string config_canonical(const std::string& json_text);

}  // namespace lowdisc

#endif  // LOWDISC_EXPERIMENT_CONFIG_HPP
