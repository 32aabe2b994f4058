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

// Command-line front end. Everything goes through the C API in
// lowdisc/lowdisc.h; stdout carries the run summary, data lands in files.

#include <lowdisc/lowdisc.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

[[noreturn]] void fail(const std::string& message) { throw CliError{message}; }

void check(lowdisc_status status, const std::string& context) {
  if (status != LOWDISC_OK) fail(context + ": " + lowdisc_last_error());
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  lowdisc_string_free(s);
  return out;
}

struct SpecHandle {
  lowdisc_spec* p = nullptr;
  ~SpecHandle() { lowdisc_spec_free(p); }
};

struct PointsHandle {
  lowdisc_points* p = nullptr;
  ~PointsHandle() { lowdisc_points_free(p); }
};

struct GapsHandle {
  lowdisc_gaps* p = nullptr;
  ~GapsHandle() { lowdisc_gaps_free(p); }
};

void parse_spec(const std::string& text, bool extended, SpecHandle* spec) {
  check(lowdisc_spec_parse(text.c_str(), &spec->p), "bad sequence spec '" + text + "'");
  if (extended) check(lowdisc_spec_set_extended(spec->p, 1), "spec");
  if (lowdisc_spec_near_rational(spec->p))
    std::fprintf(stderr, "warning: a Kronecker coordinate looks rational at working precision\n");
}

std::vector<int64_t> parse_n(const std::string& text) {
  std::vector<int64_t> out(1024);
  int32_t count = 0;
  check(lowdisc_parse_n(text.c_str(), out.data(), static_cast<int32_t>(out.size()), &count),
        "bad N grammar '" + text + "'");
  out.resize(static_cast<std::size_t>(count));
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    char* end = nullptr;
    double v = std::strtod(part.c_str(), &end);
    if (end == part.c_str() || *end != '\0') fail("bad number list: " + text);
    out.push_back(v);
  }
  if (out.empty()) fail("empty number list");
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail("cannot open output file: " + path);
  f << content;
  if (!f) fail("write failed: " + path);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Merge config-file values with explicit flags (flags win).
ordered_json load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot read config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  char* canon = nullptr;
  check(lowdisc_config_canonical(ss.str().c_str(), &canon), "config file " + path);
  return ordered_json::parse(take_string(canon));
}

// ---------------------------------------------------------------------------

int cmd_generate(const std::string& seq, int64_t n, bool extended, const std::string& out) {
  SpecHandle spec;
  parse_spec(seq, extended, &spec);
  PointsHandle points;
  check(lowdisc_generate(spec.p, n, &points.p), "generate");
  char* csv = nullptr;
  check(lowdisc_points_csv(points.p, &csv), "csv export");
  write_file(out, take_string(csv));
  std::printf("generate: wrote %lld point(s), d=%d, to %s\n",
              static_cast<long long>(lowdisc_points_size(points.p)),
              lowdisc_points_dimension(points.p), out.c_str());
  return kExitOk;
}

int cmd_gaps(const std::string& seq, const std::string& n_text, double tolerance, double alpha,
             bool classify, bool extended, const std::string& out) {
  SpecHandle spec;
  parse_spec(seq, extended, &spec);
  std::vector<int64_t> ns = parse_n(n_text);

  // Family labels by rank, when requested and trackable.
  std::vector<std::string> labels;  // indexed by rank
  bool rank_matched = false;
  if (classify) {
    if (ns.size() < 4) fail("--classify needs at least 4 values of N");
    char* json = nullptr;
    check(lowdisc_classify_gaps(spec.p, alpha, ns.data(), static_cast<int32_t>(ns.size()), &json),
          "classify");
    ordered_json doc = ordered_json::parse(take_string(json));
    rank_matched = doc.value("rank_matched", false);
    for (const auto& fam : doc.value("families", ordered_json::array()))
      labels.push_back(fam.value("label", "undetermined"));
  }

  std::string csv = classify ? "N,k,L_k,N_k,N^alpha*L_k,label\n" : "N,k,L_k,N_k,N^alpha*L_k\n";
  for (int64_t n : ns) {
    PointsHandle points;
    check(lowdisc_generate(spec.p, n, &points.p), "generate");
    GapsHandle gaps;
    check(lowdisc_gaps_compute(points.p, tolerance, &gaps.p), "gap spectrum");
    double n_alpha = std::pow(static_cast<double>(n), alpha);
    for (int32_t k = 0; k < lowdisc_gaps_count(gaps.p); ++k) {
      double length = 0.0;
      int64_t mult = 0;
      check(lowdisc_gaps_get(gaps.p, k, &length, &mult), "gap spectrum");
      csv += std::to_string(n) + "," + std::to_string(k + 1) + "," + fmt(length) + "," +
             std::to_string(mult) + "," + fmt(n_alpha * length);
      if (classify) {
        std::string label = "undetermined";
        if (rank_matched && static_cast<std::size_t>(k) < labels.size())
          label = labels[static_cast<std::size_t>(k)];
        csv += "," + label;
      }
      csv.push_back('\n');
    }
  }
  write_file(out, csv);
  std::printf("gaps: wrote spectra for %zu value(s) of N to %s\n", ns.size(), out.c_str());
  return kExitOk;
}

int cmd_paircorr(const std::string& seq, const std::string& n_text, double alpha,
                 const std::string& s_text, bool strict, int64_t deviation_k, bool extended,
                 const std::string& out) {
  SpecHandle spec;
  parse_spec(seq, extended, &spec);
  std::vector<int64_t> ns = parse_n(n_text);

  std::string csv;
  if (deviation_k > 0) {
    csv = "N,K,alpha,F\n";
    for (int64_t n : ns) {
      PointsHandle points;
      check(lowdisc_generate(spec.p, n, &points.p), "generate");
      double f = 0.0;
      check(lowdisc_deviation_statistic(points.p, deviation_k, alpha, &f), "deviation statistic");
      csv += std::to_string(n) + "," + std::to_string(deviation_k) + "," + fmt(alpha) + "," +
             fmt(f) + "\n";
    }
  } else {
    std::vector<double> s_values = parse_doubles(s_text);
    csv = "N,s,alpha,raw_count,value\n";
    for (int64_t n : ns) {
      PointsHandle points;
      check(lowdisc_generate(spec.p, n, &points.p), "generate");
      for (double s : s_values) {
        lowdisc_pc_point p{};
        check(lowdisc_pair_correlation(points.p, s, alpha, strict ? 1 : 0, &p),
              "pair correlation");
        if (p.saturated)
          std::fprintf(stderr, "warning: s N^-alpha >= 1/2 at N=%lld; statistic saturates\n",
                       static_cast<long long>(n));
        csv += std::to_string(n) + "," + fmt(s) + "," + fmt(alpha) + "," +
               std::to_string(static_cast<long long>(p.raw_count)) + "," + fmt(p.value) + "\n";
      }
    }
  }
  write_file(out, csv);
  std::printf("paircorr: wrote %zu N value(s) to %s\n", ns.size(), out.c_str());
  return kExitOk;
}

int cmd_discrepancy(const std::string& seq, const std::string& n_text, bool gap_bound,
                    bool pc_bound, double alpha, bool extended, const std::string& out) {
  SpecHandle spec;
  parse_spec(seq, extended, &spec);
  std::vector<int64_t> ns = parse_n(n_text);

  std::string csv;
  if (gap_bound) {
    csv = "N,gap_classes,R,epsilon,bound,star,satisfied\n";
  } else if (pc_bound) {
    csv = "N,alpha,K,F,bound,measured,satisfied\n";
  } else {
    csv = "N,star,extreme,witness_b,witness_closed,witness_deviation\n";
  }

  for (int64_t n : ns) {
    PointsHandle points;
    check(lowdisc_generate(spec.p, n, &points.p), "generate");
    if (gap_bound) {
      lowdisc_gap_bound_report rep{};
      check(lowdisc_gap_bound(points.p, &rep), "gap bound");
      csv += std::to_string(n) + "," + std::to_string(rep.gap_classes) + "," + fmt(rep.r) + "," +
             fmt(rep.epsilon) + "," + fmt(rep.bound) + "," + fmt(rep.measured_star) + "," +
             std::to_string(rep.satisfied) + "\n";
    } else if (pc_bound) {
      lowdisc_pc_bound_report rep{};
      check(lowdisc_pc_bound(points.p, alpha, 0, &rep), "pc bound");
      csv += std::to_string(n) + "," + fmt(rep.alpha) + "," +
             std::to_string(static_cast<long long>(rep.k)) + "," + fmt(rep.f_value) + "," +
             fmt(rep.bound) + "," + fmt(rep.measured) + "," + std::to_string(rep.satisfied) +
             "\n";
    } else {
      lowdisc_disc_report rep{};
      check(lowdisc_star_discrepancy(points.p, &rep), "star discrepancy");
      std::string witness = fmt(rep.witness_b[0]);
      for (int j = 1; j < rep.dimension; ++j) witness += ";" + fmt(rep.witness_b[j]);
      csv += std::to_string(n) + "," + fmt(rep.star) + "," +
             (rep.dimension == 1 ? fmt(rep.extreme) : std::string()) + "," + witness + "," +
             std::to_string(rep.witness_closed) + "," + fmt(rep.witness_deviation) + "\n";
    }
  }
  write_file(out, csv);
  std::printf("discrepancy: wrote %zu N value(s) to %s\n", ns.size(), out.c_str());
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& suites_arg, const ordered_json& config,
               const std::string& format, const std::string& out, bool timings) {
  static const std::vector<std::string> kAll = {
      "three_gap", "ostrowski", "number_variance", "ppc_failure", "gap_bound", "pc_bound",
      "vdc_low_discrepancy", "kronecker_low_discrepancy", "obstruction"};
  std::vector<std::string> suites;
  for (const auto& s : suites_arg) {
    if (s == "all") {
      suites = kAll;
      break;
    }
    suites.push_back(s);
  }
  if (suites.empty()) fail("verify: no suite given (use one of the suite ids or 'all')");

  ordered_json cfg = config;
  cfg["timings"] = timings;

  ordered_json merged;
  merged["schema_version"] = 1;
  merged["suites"] = ordered_json::array();
  int failures = 0, inconclusive = 0;
  for (const auto& id : suites) {
    char* json = nullptr;
    int32_t f = 0, inc = 0;
    check(lowdisc_verify_run(id.c_str(), cfg.dump().c_str(), &json, &f, &inc),
          "verify suite '" + id + "'");
    ordered_json doc = ordered_json::parse(take_string(json));
    for (auto& s : doc["suites"]) merged["suites"].push_back(s);
    failures += f;
    inconclusive += inc;
    std::printf("verify %-26s failures=%d inconclusive=%d\n", id.c_str(), f, inc);
  }
  merged["failures"] = failures;
  merged["inconclusive"] = inconclusive;

  std::string body;
  if (format == "json") {
    body = merged.dump(2) + "\n";
  } else {
    char* csv = nullptr;
    check(lowdisc_verify_render_csv(merged.dump().c_str(), &csv), "render csv");
    body = take_string(csv);
  }
  write_file(out, body);
  std::printf("verify: %d failure(s), %d inconclusive, report written to %s\n", failures,
              inconclusive, out.c_str());
  if (inconclusive > 0)
    std::fprintf(stderr, "warning: %d case(s) inconclusive (asymptotic statements)\n",
                 inconclusive);
  return failures > 0 ? kExitSuiteFailure : kExitOk;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& format,
               const std::string& out) {
  if (inputs.empty()) fail("report: no input files");
  ordered_json merged;
  merged["schema_version"] = 1;
  merged["suites"] = ordered_json::array();
  int failures = 0, inconclusive = 0;
  for (const auto& path : inputs) {
    std::ifstream f(path);
    if (!f) fail("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    ordered_json doc;
    try {
      doc = ordered_json::parse(ss.str());
    } catch (const std::exception& e) {
      fail("bad JSON in " + path + ": " + e.what());
    }
    if (!doc.contains("suites")) fail("not a verify result document: " + path);
    for (auto& s : doc["suites"]) merged["suites"].push_back(s);
    failures += doc.value("failures", 0);
    inconclusive += doc.value("inconclusive", 0);
  }
  merged["failures"] = failures;
  merged["inconclusive"] = inconclusive;

  std::string body;
  if (format == "json") {
    body = merged.dump(2) + "\n";
  } else {
    char* csv = nullptr;
    check(lowdisc_verify_render_csv(merged.dump().c_str(), &csv), "render csv");
    body = take_string(csv);
  }
  write_file(out, body);
  std::printf("report: merged %zu file(s), %d failure(s), written to %s\n", inputs.size(),
              failures, out.c_str());
  return failures > 0 ? kExitSuiteFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lowdisc: gap structure, pair correlations, and discrepancy of "
               "low-discrepancy sequences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lowdisc_version()));

  std::string config_path;
  int threads = 0;
  app.add_option("--config", config_path, "JSON config file mirroring the flags");
  app.add_option("--threads", threads, "worker threads (also: LOWDISC_THREADS)");

  // generate
  auto* generate = app.add_subcommand("generate", "emit points of a sequence as CSV");
  std::string g_seq, g_out = "points.csv";
  int64_t g_n = 0;
  bool g_ext = false, g_zeroth = false;
  generate->add_option("--seq", g_seq, "sequence spec (kronecker:phi, vdc:b=2, random:seed=1)");
  generate->add_option("--n", g_n, "number of points");
  generate->add_flag("--extended", g_ext, "treat user-supplied z as exact");
  generate->add_flag("--vdc-zeroth", g_zeroth, "prepend 0 to van der Corput output");
  generate->add_option("--out", g_out, "output CSV path");

  // gaps
  auto* gaps = app.add_subcommand("gaps", "circle-gap spectrum (optionally classified)");
  std::string ga_seq, ga_n, ga_out = "gaps.csv";
  double ga_tol = 1e-9, ga_alpha = 1.0;
  bool ga_classify = false, ga_ext = false, ga_zeroth = false;
  gaps->add_option("--seq", ga_seq, "sequence spec");
  gaps->add_option("--n", ga_n, "N or a:b:geomsteps");
  gaps->add_option("--tol", ga_tol, "gap grouping tolerance");
  gaps->add_option("--alpha", ga_alpha, "exponent for the scaled column N^alpha L");
  gaps->add_flag("--classify", ga_classify, "label gap families (needs >= 4 N values)");
  gaps->add_flag("--extended", ga_ext, "treat user-supplied z as exact");
  gaps->add_flag("--vdc-zeroth", ga_zeroth, "prepend 0 to van der Corput output");
  gaps->add_option("--out", ga_out, "output CSV path");

  // paircorr
  auto* paircorr = app.add_subcommand("paircorr", "pair correlation statistics");
  std::string pc_seq, pc_n, pc_s = "1", pc_out = "paircorr.csv";
  double pc_alpha = 1.0;
  bool pc_strict = false, pc_ext = false, pc_zeroth = false;
  int64_t pc_dev = 0;
  paircorr->add_option("--seq", pc_seq, "sequence spec");
  paircorr->add_option("--n", pc_n, "N or a:b:geomsteps");
  paircorr->add_option("--alpha", pc_alpha, "scale exponent");
  paircorr->add_option("--s", pc_s, "comma-separated s values");
  paircorr->add_flag("--strict", pc_strict, "strict (<) comparison");
  paircorr->add_option("--deviation", pc_dev, "emit the F(K,N) table for this K");
  paircorr->add_flag("--extended", pc_ext, "treat user-supplied z as exact");
  paircorr->add_flag("--vdc-zeroth", pc_zeroth, "prepend 0 to van der Corput output");
  paircorr->add_option("--out", pc_out, "output CSV path");

  // discrepancy
  auto* disc = app.add_subcommand("discrepancy", "star/extreme discrepancy and theorem bounds");
  std::string d_seq, d_n, d_out = "discrepancy.csv";
  bool d_gap = false, d_pc = false, d_ext = false, d_zeroth = false;
  double d_alpha = 1.0;
  disc->add_option("--seq", d_seq, "sequence spec");
  disc->add_option("--n", d_n, "N or a:b:geomsteps");
  disc->add_flag("--gap-bound", d_gap, "emit the gap-structure bound report");
  disc->add_flag("--pc-bound", d_pc, "emit the pair-correlation bound report");
  disc->add_option("--alpha", d_alpha, "alpha for --pc-bound");
  disc->add_flag("--extended", d_ext, "treat user-supplied z as exact");
  disc->add_flag("--vdc-zeroth", d_zeroth, "prepend 0 to van der Corput output");
  disc->add_option("--out", d_out, "output CSV path");

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> v_suites;
  std::string v_out = "verify.json", v_format = "json";
  int64_t v_trials = 0, v_max_n = 0;
  uint64_t v_seed = 0;
  bool v_timings = false, v_dump = false;
  verify->add_option("suites", v_suites, "suite ids or 'all'");
  verify->add_option("--trials", v_trials, "trial count override");
  verify->add_option("--max-n", v_max_n, "largest N override");
  verify->add_option("--seed", v_seed, "base seed override");
  verify->add_option("--format", v_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", v_out, "report path");
  verify->add_flag("--timings", v_timings, "include runtimes in the report file");
  verify->add_flag("--dump-config", v_dump, "print the canonical config and exit");

  // report
  auto* report = app.add_subcommand("report", "merge and re-render verify reports");
  std::vector<std::string> r_in;
  std::string r_out = "report.csv", r_format = "csv";
  report->add_option("--in", r_in, "verify JSON files");
  report->add_option("--format", r_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  report->add_option("--out", r_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (threads > 0) {
      setenv("LOWDISC_THREADS", std::to_string(threads).c_str(), 1);
    }

    ordered_json config = ordered_json::object();
    if (!config_path.empty()) config = load_config(config_path);

    // Flags win over the config file; the config fills everything else.
    auto cfg_string = [&config](const char* key, const std::string& flag, bool given) {
      return given || !config.contains(key) ? flag : config[key].get<std::string>();
    };
    auto cfg_double = [&config](const char* key, double flag, bool given) {
      return given || !config.contains(key) ? flag : config[key].get<double>();
    };
    auto cfg_int = [&config](const char* key, int64_t flag, bool given) {
      return given || !config.contains(key) ? flag : config[key].get<int64_t>();
    };
    auto cfg_flag = [&config](const char* key, bool flag) {
      return flag || config.value(key, false);
    };
    auto cfg_n = [&config](const std::string& flag, bool given) -> std::string {
      if (given || !config.contains("n")) return flag;
      if (config["n"].is_string()) return config["n"].get<std::string>();
      std::string joined;
      for (const auto& v : config["n"]) {
        if (!joined.empty()) joined.push_back(',');
        joined += std::to_string(v.get<int64_t>());
      }
      return joined;
    };
    auto cfg_s = [&config](const std::string& flag, bool given) -> std::string {
      if (given || !config.contains("s")) return flag;
      std::string joined;
      for (const auto& v : config["s"]) {
        if (!joined.empty()) joined.push_back(',');
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
        joined += buf;
      }
      return joined;
    };
    // The vdc_zeroth flag rewrites a plain vdc spec.
    auto apply_zeroth = [&](std::string seq, bool zeroth_flag) {
      if (cfg_flag("vdc_zeroth", zeroth_flag) && seq.rfind("vdc:", 0) == 0 &&
          seq.find("zeroth") == std::string::npos)
        seq += ",zeroth";
      return seq;
    };

    if (*generate) {
      std::string seq = cfg_string("sequence", g_seq, generate->count("--seq") > 0);
      if (seq.empty()) fail("generate: --seq is required");
      if (g_n < 1) {
        std::string n_text = cfg_n("", false);
        if (!n_text.empty()) {
          auto ns = parse_n(n_text.find(',') == std::string::npos ? n_text
                                                                  : n_text.substr(0, n_text.find(',')));
          if (!ns.empty()) g_n = ns.front();
        }
      }
      if (g_n < 1) fail("generate: --n must be >= 1");
      return cmd_generate(apply_zeroth(seq, g_zeroth), g_n, cfg_flag("extended", g_ext),
                          cfg_string("output", g_out, generate->count("--out") > 0));
    }
    if (*gaps) {
      std::string seq = cfg_string("sequence", ga_seq, gaps->count("--seq") > 0);
      std::string n_text = cfg_n(ga_n, gaps->count("--n") > 0);
      if (seq.empty() || n_text.empty()) fail("gaps: --seq and --n are required");
      return cmd_gaps(apply_zeroth(seq, ga_zeroth), n_text, ga_tol,
                      cfg_double("alpha", ga_alpha, gaps->count("--alpha") > 0), ga_classify,
                      cfg_flag("extended", ga_ext),
                      cfg_string("output", ga_out, gaps->count("--out") > 0));
    }
    if (*paircorr) {
      std::string seq = cfg_string("sequence", pc_seq, paircorr->count("--seq") > 0);
      std::string n_text = cfg_n(pc_n, paircorr->count("--n") > 0);
      if (seq.empty() || n_text.empty()) fail("paircorr: --seq and --n are required");
      return cmd_paircorr(apply_zeroth(seq, pc_zeroth), n_text,
                          cfg_double("alpha", pc_alpha, paircorr->count("--alpha") > 0),
                          cfg_s(pc_s, paircorr->count("--s") > 0), cfg_flag("strict", pc_strict),
                          cfg_int("deviation_k", pc_dev, paircorr->count("--deviation") > 0),
                          cfg_flag("extended", pc_ext),
                          cfg_string("output", pc_out, paircorr->count("--out") > 0));
    }
    if (*disc) {
      std::string seq = cfg_string("sequence", d_seq, disc->count("--seq") > 0);
      std::string n_text = cfg_n(d_n, disc->count("--n") > 0);
      if (seq.empty() || n_text.empty()) fail("discrepancy: --seq and --n are required");
      if (d_gap && d_pc) fail("discrepancy: choose one of --gap-bound / --pc-bound");
      return cmd_discrepancy(apply_zeroth(seq, d_zeroth), n_text, d_gap, d_pc,
                             cfg_double("alpha", d_alpha, disc->count("--alpha") > 0),
                             cfg_flag("extended", d_ext),
                             cfg_string("output", d_out, disc->count("--out") > 0));
    }
    if (*verify) {
      ordered_json cfg = config;
      if (v_trials > 0) cfg["trials"] = v_trials;
      if (v_max_n > 0) cfg["max_n"] = v_max_n;
      if (verify->count("--seed") > 0) cfg["seed"] = v_seed;
      if (v_dump) {
        char* canon = nullptr;
        check(lowdisc_config_canonical(cfg.dump().c_str(), &canon), "config");
        std::printf("%s", take_string(canon).c_str());
        return kExitOk;
      }
      std::string format = verify->count("--format") > 0 ? v_format
                                                         : config.value("format", v_format);
      std::string out = verify->count("--out") > 0 ? v_out : config.value("output", v_out);
      if (out.empty()) out = v_out;
      return cmd_verify(v_suites, cfg, format, out, v_timings || config.value("timings", false));
    }
    if (*report) {
      return cmd_report(r_in, r_format, r_out);
    }
    fail("no subcommand");
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
