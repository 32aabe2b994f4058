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

#include "lowdisc/lowdisc.h"

#include <json.hpp>

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "continued_fractions.hpp"
#include "discrepancy.hpp"
#include "errors.hpp"
#include "experiment_config.hpp"
#include "gap_analysis.hpp"
#include "pair_correlation.hpp"
#include "sequences.hpp"
#include "verify.hpp"

using namespace lowdisc;

extern "C" {

struct lowdisc_spec {
  SequenceSpec rep;
};

struct lowdisc_points {
  PointSet rep;
};

struct lowdisc_cf {
  CfExpansion rep;
};

struct lowdisc_gaps {
  GapSpectrum rep;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

lowdisc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return LOWDISC_EINVAL;
    case ErrorCode::domain: return LOWDISC_EDOMAIN;
    case ErrorCode::overflow: return LOWDISC_EOVERFLOW;
    case ErrorCode::budget: return LOWDISC_EBUDGET;
    case ErrorCode::insufficient_data: return LOWDISC_EDATA;
    case ErrorCode::io: return LOWDISC_EIO;
    case ErrorCode::internal: return LOWDISC_EINTERNAL;
  }
  return LOWDISC_EINTERNAL;
}

template <typename Fn>
lowdisc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LOWDISC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LOWDISC_EINTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LOWDISC_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::invalid_argument, what);
}

nlohmann::ordered_json classification_json(const GapClassification& cls) {
  nlohmann::ordered_json j;
  j["alpha"] = cls.alpha;
  j["n"] = cls.n_list;
  j["rank_matched"] = cls.rank_matched;
  nlohmann::ordered_json fams = nlohmann::ordered_json::array();
  for (const auto& f : cls.families) {
    nlohmann::ordered_json jf;
    jf["rank"] = f.rank;
    jf["label"] = gap_label_name(f.label);
    jf["complete"] = f.complete;
    jf["traj_min"] = f.traj_min;
    jf["traj_max"] = f.traj_max;
    nlohmann::ordered_json lengths = nlohmann::ordered_json::array();
    nlohmann::ordered_json traj = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < f.lengths.size(); ++i) {
      if (std::isnan(f.lengths[i])) {
        lengths.push_back(nullptr);
        traj.push_back(nullptr);
      } else {
        lengths.push_back(f.lengths[i]);
        traj.push_back(f.trajectory[i]);
      }
    }
    jf["lengths"] = lengths;
    jf["trajectory"] = traj;
    fams.push_back(jf);
  }
  j["families"] = fams;
  return j;
}

ExperimentConfig config_of(const char* config_json) {
  if (config_json == nullptr || config_json[0] == '\0') return ExperimentConfig{};
  return config_from_json(config_json);
}

}  // namespace

extern "C" {

const char* lowdisc_version(void) { return "0.1.0"; }

const char* lowdisc_last_error(void) { return g_last_error.c_str(); }

void lowdisc_string_free(char* s) { delete[] s; }

/* ------------------------------------------------------------------ */

lowdisc_status lowdisc_spec_parse(const char* text, lowdisc_spec** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new lowdisc_spec{spec_parse(text)};
  });
}

void lowdisc_spec_free(lowdisc_spec* spec) { delete spec; }

lowdisc_status lowdisc_spec_format(const lowdisc_spec* spec, char** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = dup_string(spec_format(spec->rep));
  });
}

lowdisc_status lowdisc_spec_set_extended(lowdisc_spec* spec, int extended) {
  return guarded([&] {
    require(spec != nullptr, "null argument");
    if (spec->rep.kind == SequenceKind::kronecker) spec->rep.z_exact = extended != 0;
  });
}

int lowdisc_spec_near_rational(const lowdisc_spec* spec) {
  if (spec == nullptr) return 0;
  try {
    return spec_near_rational_warning(spec->rep) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

lowdisc_status lowdisc_generate(const lowdisc_spec* spec, int64_t n, lowdisc_points** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = new lowdisc_points{generate(spec->rep, n)};
  });
}

lowdisc_status lowdisc_points_create(const double* coords, int64_t n, int32_t dimension,
                                     lowdisc_points** out) {
  return guarded([&] {
    require(coords != nullptr && out != nullptr, "null argument");
    require(n >= 1 && dimension >= 1, "need n >= 1 and dimension >= 1");
    std::vector<double> values(coords, coords + static_cast<std::size_t>(n) * dimension);
    *out = new lowdisc_points{pointset_from_values(values, dimension)};
  });
}

void lowdisc_points_free(lowdisc_points* ps) { delete ps; }

int64_t lowdisc_points_size(const lowdisc_points* ps) { return ps ? ps->rep.n : 0; }

int32_t lowdisc_points_dimension(const lowdisc_points* ps) { return ps ? ps->rep.dimension : 0; }

lowdisc_status lowdisc_points_get(const lowdisc_points* ps, int64_t index, double* coords) {
  return guarded([&] {
    require(ps != nullptr && coords != nullptr, "null argument");
    require(index >= 0 && index < ps->rep.n, "index out of range");
    for (int j = 0; j < ps->rep.dimension; ++j) coords[j] = ps->rep.at(index, j);
  });
}

lowdisc_status lowdisc_points_sort(const lowdisc_points* ps, lowdisc_points** out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    *out = new lowdisc_points{sort_ascending(ps->rep)};
  });
}

lowdisc_status lowdisc_points_csv(const lowdisc_points* ps, char** out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    *out = dup_string(pointset_to_csv(ps->rep));
  });
}

/* ------------------------------------------------------------------ */

lowdisc_status lowdisc_cf_expand(double x, int32_t max_terms, double tolerance,
                                 lowdisc_cf** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new lowdisc_cf{cf_expand(x, max_terms, tolerance)};
  });
}

lowdisc_status lowdisc_cf_named(const char* name, int32_t max_terms, lowdisc_cf** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = new lowdisc_cf{cf_named(name, max_terms)};
  });
}

void lowdisc_cf_free(lowdisc_cf* cf) { delete cf; }

int32_t lowdisc_cf_terms(const lowdisc_cf* cf) {
  return cf ? static_cast<int32_t>(cf->rep.digits.size()) : 0;
}

lowdisc_status lowdisc_cf_digit(const lowdisc_cf* cf, int32_t index, int64_t* out) {
  return guarded([&] {
    require(cf != nullptr && out != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int32_t>(cf->rep.digits.size()),
            "index out of range");
    *out = cf->rep.digits[static_cast<std::size_t>(index)];
  });
}

lowdisc_status lowdisc_cf_convergent(const lowdisc_cf* cf, int32_t index, int64_t* p,
                                     int64_t* q) {
  return guarded([&] {
    require(cf != nullptr && p != nullptr && q != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int32_t>(cf->rep.convergents.size()),
            "index out of range");
    *p = cf->rep.convergents[static_cast<std::size_t>(index)].first;
    *q = cf->rep.convergents[static_cast<std::size_t>(index)].second;
  });
}

int lowdisc_cf_terminated(const lowdisc_cf* cf) { return cf && cf->rep.terminated ? 1 : 0; }

int lowdisc_cf_truncated(const lowdisc_cf* cf) { return cf && cf->rep.digits_truncated ? 1 : 0; }

lowdisc_status lowdisc_ostrowski(const lowdisc_cf* cf, int64_t n, int64_t* digits,
                                 int32_t* length) {
  return guarded([&] {
    require(cf != nullptr && digits != nullptr && length != nullptr, "null argument");
    OstrowskiDigits o = ostrowski_expand(n, cf->rep);
    for (std::size_t k = 0; k < o.digits.size(); ++k) digits[k] = o.digits[k];
    *length = static_cast<int32_t>(o.digits.size());
  });
}

double lowdisc_torus_norm(double x) {
  try {
    return torus_norm(x);
  } catch (...) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

/* ------------------------------------------------------------------ */

lowdisc_status lowdisc_gaps_compute(const lowdisc_points* ps, double grouping_tolerance,
                                    lowdisc_gaps** out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    *out = new lowdisc_gaps{gap_spectrum(ps->rep, grouping_tolerance)};
  });
}

void lowdisc_gaps_free(lowdisc_gaps* gaps) { delete gaps; }

int32_t lowdisc_gaps_count(const lowdisc_gaps* gaps) {
  return gaps ? static_cast<int32_t>(gaps->rep.distinct()) : 0;
}

lowdisc_status lowdisc_gaps_get(const lowdisc_gaps* gaps, int32_t index, double* length,
                                int64_t* multiplicity) {
  return guarded([&] {
    require(gaps != nullptr && length != nullptr && multiplicity != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int32_t>(gaps->rep.distinct()),
            "index out of range");
    *length = gaps->rep.lengths[static_cast<std::size_t>(index)];
    *multiplicity = gaps->rep.multiplicities[static_cast<std::size_t>(index)];
  });
}

int lowdisc_gaps_has_duplicates(const lowdisc_gaps* gaps) {
  return gaps && gaps->rep.has_duplicates ? 1 : 0;
}

lowdisc_status lowdisc_three_gap_predict(const lowdisc_spec* spec, int64_t n,
                                         lowdisc_three_gap_prediction* out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    require(spec->rep.kind == SequenceKind::kronecker && spec->rep.dimension == 1,
            "three_gap_predict needs a 1-d Kronecker spec");
    CfExpansion cf;
    if (!spec->rep.z_names.empty() && !spec->rep.z_names[0].empty()) {
      cf = cf_named(spec->rep.z_names[0], 90);
    } else {
      cf = cf_expand_dd(spec->rep.z[0], 90, 0.0,
                        spec->rep.z_exact ? std::abs(dd_to_double(spec->rep.z[0])) * 0x1.0p-105
                                          : std::abs(dd_to_double(spec->rep.z[0])) *
                                                std::numeric_limits<double>::epsilon());
    }
    ThreeGapPrediction pred = three_gap_predict(cf, n);
    out->l1 = pred.l1;
    out->l2 = pred.l2;
    out->l3 = pred.l3;
    out->n1 = pred.n1;
    out->n2 = pred.n2;
    out->n3 = pred.n3;
    out->n2_literal = pred.n2_literal;
    out->degenerate = pred.degenerate ? 1 : 0;
  });
}

lowdisc_status lowdisc_classify_gaps(const lowdisc_spec* spec, double alpha,
                                     const int64_t* n_list, int32_t n_count, char** json_out) {
  return guarded([&] {
    require(spec != nullptr && n_list != nullptr && json_out != nullptr, "null argument");
    std::vector<std::int64_t> ns(n_list, n_list + n_count);
    GapClassification cls = classify_gaps(spec->rep, alpha, ns);
    *json_out = dup_string(classification_json(cls).dump(2) + "\n");
  });
}

lowdisc_status lowdisc_check_obstructions(const lowdisc_spec* spec, double alpha,
                                          const int64_t* n_list, int32_t n_count,
                                          char** json_out) {
  return guarded([&] {
    require(spec != nullptr && n_list != nullptr && json_out != nullptr, "null argument");
    std::vector<std::int64_t> ns(n_list, n_list + n_count);
    ObstructionReport rep = check_obstructions(spec->rep, alpha, ns);
    nlohmann::ordered_json j;
    j["alpha"] = rep.alpha;
    j["obstruction1"] = obstruction_status_name(rep.obstruction1);
    j["obstruction2"] = obstruction_status_name(rep.obstruction2);
    j["detail"] = rep.detail;
    j["classification"] = classification_json(rep.classification);
    *json_out = dup_string(j.dump(2) + "\n");
  });
}

/* ------------------------------------------------------------------ */

lowdisc_status lowdisc_pair_count(const lowdisc_points* ps, double radius, int strict,
                                  int64_t* out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    *out = pair_count(ps->rep, radius, strict != 0);
  });
}

lowdisc_status lowdisc_pair_correlation(const lowdisc_points* ps, double s, double alpha,
                                        int strict, lowdisc_pc_point* out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    PairCorrelationPoint p = pair_correlation(ps->rep, s, alpha, strict != 0);
    out->n = p.n;
    out->s = p.s;
    out->alpha = p.alpha;
    out->dimension = p.dimension;
    out->raw_count = p.raw_count;
    out->ball_volume = p.ball_volume;
    out->value = p.value;
    out->saturated = p.saturated ? 1 : 0;
  });
}

lowdisc_status lowdisc_deviation_statistic(const lowdisc_points* ps, int64_t k, double alpha,
                                           double* out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    *out = deviation_statistic(ps->rep, k, alpha).value;
  });
}

/* ------------------------------------------------------------------ */

lowdisc_status lowdisc_star_discrepancy(const lowdisc_points* ps, lowdisc_disc_report* out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    DiscrepancyReport rep =
        ps->rep.dimension == 1 ? star_discrepancy_1d(ps->rep) : star_discrepancy_md(ps->rep);
    out->n = rep.n;
    out->dimension = rep.dimension;
    out->star = rep.star;
    out->extreme = rep.extreme ? *rep.extreme : std::numeric_limits<double>::quiet_NaN();
    out->method = rep.method == DiscrepancyMethod::exact_1d ? 0 : 1;
    for (int j = 0; j < 3; ++j)
      out->witness_b[j] = j < static_cast<int>(rep.witness_b.size()) ? rep.witness_b[j] : 0.0;
    out->witness_closed = rep.witness_closed ? 1 : 0;
    out->witness_deviation = rep.witness_deviation;
  });
}

lowdisc_status lowdisc_extreme_discrepancy_1d(const lowdisc_points* ps, double* out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    *out = extreme_discrepancy_1d(ps->rep);
  });
}

lowdisc_status lowdisc_star_discrepancy_lower_bound(const lowdisc_points* ps, int64_t boxes,
                                                    uint64_t seed, double* out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    *out = star_discrepancy_lower_bound(ps->rep, boxes, seed);
  });
}

lowdisc_status lowdisc_gap_bound(const lowdisc_points* ps, lowdisc_gap_bound_report* out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    GapBoundReport rep = gap_based_bound(ps->rep);
    out->n = rep.n;
    out->gap_classes = static_cast<int32_t>(rep.spectrum.distinct());
    out->r = rep.r;
    out->epsilon = rep.epsilon;
    out->bound = rep.bound;
    out->measured_star = rep.measured_star;
    out->satisfied = rep.satisfied ? 1 : 0;
  });
}

lowdisc_status lowdisc_pc_bound(const lowdisc_points* ps, double alpha, int64_t k,
                                lowdisc_pc_bound_report* out) {
  return guarded([&] {
    require(ps != nullptr && out != nullptr, "null argument");
    PcBoundReport rep = pc_based_bound(ps->rep, alpha, k);
    out->n = rep.n;
    out->alpha = rep.alpha;
    out->k = rep.k;
    out->f_value = rep.f_value;
    out->bound = rep.bound;
    out->measured = rep.measured;
    out->satisfied = rep.satisfied ? 1 : 0;
  });
}

/* ------------------------------------------------------------------ */

lowdisc_status lowdisc_config_canonical(const char* config_json, char** out) {
  return guarded([&] {
    require(config_json != nullptr && out != nullptr, "null argument");
    *out = dup_string(config_canonical(config_json));
  });
}

lowdisc_status lowdisc_parse_n(const char* text, int64_t* out, int32_t capacity,
                               int32_t* count) {
  return guarded([&] {
    require(text != nullptr && out != nullptr && count != nullptr, "null argument");
    std::vector<std::int64_t> ns = parse_n_grammar(text);
    require(static_cast<int32_t>(ns.size()) <= capacity, "N list exceeds capacity");
    for (std::size_t i = 0; i < ns.size(); ++i) out[i] = ns[i];
    *count = static_cast<int32_t>(ns.size());
  });
}

lowdisc_status lowdisc_verify_run(const char* suite_id, const char* config_json,
                                  char** json_out, int32_t* failures, int32_t* inconclusive) {
  return guarded([&] {
    require(suite_id != nullptr && json_out != nullptr, "null argument");
    ExperimentConfig cfg = config_of(config_json);
    SuiteResult result = run_suite(suite_id, cfg);
    *json_out = dup_string(suites_to_json({result}, cfg.timings));
    if (failures != nullptr) *failures = result.failures;
    if (inconclusive != nullptr) *inconclusive = result.inconclusive;
  });
}

lowdisc_status lowdisc_verify_render_csv(const char* results_json, char** csv_out) {
  return guarded([&] {
    require(results_json != nullptr && csv_out != nullptr, "null argument");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(results_json);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::invalid_argument, std::string("bad results JSON: ") + e.what());
    }
    std::vector<SuiteResult> results;
    bool with_timings = false;
    auto read_doc = [&](const nlohmann::json& d) {
      if (!d.contains("suites") || !d["suites"].is_array())
        throw Error(ErrorCode::invalid_argument, "results JSON lacks a suites array");
      for (const auto& js : d["suites"]) {
        SuiteResult s;
        s.suite = js.value("suite", "");
        for (const auto& jc : js.value("cases", nlohmann::json::array())) {
          CaseResult c;
          c.name = jc.value("name", "");
          std::string st = jc.value("status", "fail");
          c.status = st == "pass" ? CaseStatus::pass
                     : st == "inconclusive" ? CaseStatus::inconclusive
                                            : CaseStatus::fail;
          c.margin = jc.value("margin", 0.0);
          c.detail = jc.value("detail", "");
          if (jc.contains("runtime_ms")) {
            c.runtime_ms = jc["runtime_ms"].get<double>();
            with_timings = true;
          }
          s.cases.push_back(std::move(c));
          if (s.cases.back().status == CaseStatus::fail) s.failures++;
          if (s.cases.back().status == CaseStatus::inconclusive) s.inconclusive++;
        }
        results.push_back(std::move(s));
      }
    };
    if (doc.is_array()) {
      for (const auto& d : doc) read_doc(d);
    } else {
      read_doc(doc);
    }
    if (results.empty()) throw Error(ErrorCode::invalid_argument, "no suite results to render");
    *csv_out = dup_string(suites_to_csv(results, with_timings));
  });
}

}  // extern "C"
