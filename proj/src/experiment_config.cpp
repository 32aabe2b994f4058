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

#include "experiment_config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace lowdisc {

using ordered_json = nlohmann::ordered_json;

std::vector<std::int64_t> parse_n_grammar(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::invalid_argument, "empty N grammar");
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  auto to_int = [](const std::string& s) {
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0' || v < 1)
      throw Error(ErrorCode::invalid_argument, "bad N value: " + s);
    return static_cast<std::int64_t>(v);
  };

  if (parts.size() == 1) return {to_int(parts[0])};
  if (parts.size() != 3)
    throw Error(ErrorCode::invalid_argument, "N grammar is <n> or <a>:<b>:<geomsteps>: " + text);
  std::int64_t a = to_int(parts[0]);
  std::int64_t b = to_int(parts[1]);
  std::int64_t steps = to_int(parts[2]);
  if (b < a) throw Error(ErrorCode::invalid_argument, "N grammar needs a <= b");
  steps = std::min(steps, b - a + 1);  // strictly increasing integers only
  if (steps == 1) return {a};

  std::vector<std::int64_t> out;
  double la = std::log(static_cast<double>(a));
  double lb = std::log(static_cast<double>(b));
  for (std::int64_t i = 0; i < steps; ++i) {
    double t = la + (lb - la) * static_cast<double>(i) / static_cast<double>(steps - 1);
    auto v = static_cast<std::int64_t>(std::llround(std::exp(t)));
    if (!out.empty() && v <= out.back()) v = out.back() + 1;
    out.push_back(v);
  }
  out.front() = a;
  out.back() = b;
  return out;
}

std::string format_n_grammar(const std::vector<std::int64_t>& n_list) {
  std::string out;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(n_list[i]);
  }
  return out;
}

ExperimentConfig config_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("config: bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::invalid_argument, "config: expected a JSON object");

  ExperimentConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const auto& v = it.value();
    if (key == "sequence") c.sequence = v.get<std::string>();
    else if (key == "n") {
      if (v.is_string()) c.n_list = parse_n_grammar(v.get<std::string>());
      else if (v.is_array()) c.n_list = v.get<std::vector<std::int64_t>>();
      else c.n_list = {v.get<std::int64_t>()};
    }
    else if (key == "alpha") c.alpha = v.get<double>();
    else if (key == "s") c.s_values = v.is_array() ? v.get<std::vector<double>>()
                                                   : std::vector<double>{v.get<double>()};
    else if (key == "output") c.output = v.get<std::string>();
    else if (key == "format") c.format = v.get<std::string>();
    else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else if (key == "trials") c.trials = v.get<std::int64_t>();
    else if (key == "max_n") c.max_n = v.get<std::int64_t>();
    else if (key == "deviation_k") c.deviation_k = v.get<std::int64_t>();
    else if (key == "strict") c.strict = v.get<bool>();
    else if (key == "vdc_zeroth") c.vdc_zeroth = v.get<bool>();
    else if (key == "extended") c.extended = v.get<bool>();
    else if (key == "timings") c.timings = v.get<bool>();
    else throw Error(ErrorCode::invalid_argument, "config: unknown key: " + key);
  }
  if (c.format != "csv" && c.format != "json")
    throw Error(ErrorCode::invalid_argument, "config: format must be csv or json");
  return c;
}

std::string config_to_json(const ExperimentConfig& c) {
  ordered_json j;
  j["sequence"] = c.sequence;
  j["n"] = c.n_list;
  j["alpha"] = c.alpha;
  j["s"] = c.s_values;
  j["output"] = c.output;
  j["format"] = c.format;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["max_n"] = c.max_n;
  j["deviation_k"] = c.deviation_k;
  j["strict"] = c.strict;
  j["vdc_zeroth"] = c.vdc_zeroth;
  j["extended"] = c.extended;
  j["timings"] = c.timings;
  return j.dump(2) + "\n";
}

std::string config_canonical(const std::string& json_text) {
  return config_to_json(config_from_json(json_text));
}

}  // namespace lowdisc
