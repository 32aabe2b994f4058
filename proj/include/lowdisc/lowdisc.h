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

/*
 * lowdisc -- analysis of low-discrepancy sequences: gap structure, pair
 * correlation statistics, and discrepancy bounds.
 *
 * C API conventions:
 *   - Opaque handles are created by *_create/_parse/_compute functions and
 *     released with the matching *_free; handles are never shared across
 *     unsynchronized threads, but distinct handles are safe to use in
 *     parallel.
 *   - Every fallible function returns lowdisc_status; outputs are written
 *     through pointers only on LOWDISC_OK. lowdisc_last_error() describes the
 *     most recent failure on the calling thread.
 *   - Strings returned through char** are heap-allocated; release them with
 *     lowdisc_string_free.
 */

#ifndef LOWDISC_LOWDISC_H
#define LOWDISC_LOWDISC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lowdisc_status {
  LOWDISC_OK = 0,
  LOWDISC_EINVAL = 1,   /* malformed input / precondition violated */
  LOWDISC_EDOMAIN = 2,  /* input outside the mathematical domain */
  LOWDISC_EOVERFLOW = 3,/* 64-bit integer range exceeded */
  LOWDISC_EBUDGET = 4,  /* computation refused: cost budget exceeded */
  LOWDISC_EDATA = 5,    /* more input needed (e.g. expand the cf further) */
  LOWDISC_EIO = 6,
  LOWDISC_EINTERNAL = 7
} lowdisc_status;

const char* lowdisc_version(void);
/* Description of the most recent failure on this thread ("" if none). */
const char* lowdisc_last_error(void);
void lowdisc_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Sequence specifications and point sets                             */

typedef struct lowdisc_spec lowdisc_spec;
typedef struct lowdisc_points lowdisc_points;

/* Grammar: kronecker:phi | kronecker:sqrt2 | kronecker:z=<dec>[,<dec>...]
 *        | vdc:b=<int>[,zeroth] | random:seed=<int>[,d=<int>] */
lowdisc_status lowdisc_spec_parse(const char* text, lowdisc_spec** out);
void lowdisc_spec_free(lowdisc_spec* spec);
lowdisc_status lowdisc_spec_format(const lowdisc_spec* spec, char** out);
/* Treat user-supplied decimal coordinates as exact (extended precision). */
lowdisc_status lowdisc_spec_set_extended(lowdisc_spec* spec, int extended);
/* 1 if a Kronecker coordinate looks rational at working precision. */
int lowdisc_spec_near_rational(const lowdisc_spec* spec);

lowdisc_status lowdisc_generate(const lowdisc_spec* spec, int64_t n, lowdisc_points** out);
lowdisc_status lowdisc_points_create(const double* coords, int64_t n, int32_t dimension,
                                     lowdisc_points** out);
void lowdisc_points_free(lowdisc_points* ps);
int64_t lowdisc_points_size(const lowdisc_points* ps);
int32_t lowdisc_points_dimension(const lowdisc_points* ps);
/* coords must hold dimension doubles. */
lowdisc_status lowdisc_points_get(const lowdisc_points* ps, int64_t index, double* coords);
lowdisc_status lowdisc_points_sort(const lowdisc_points* ps, lowdisc_points** out);
/* CSV: header x1..xd, one row per point, 17 significant digits. */
lowdisc_status lowdisc_points_csv(const lowdisc_points* ps, char** out);

/* ------------------------------------------------------------------ */
/* Continued fractions and Ostrowski digits                           */

typedef struct lowdisc_cf lowdisc_cf;

lowdisc_status lowdisc_cf_expand(double x, int32_t max_terms, double tolerance, lowdisc_cf** out);
/* name: "phi" | "sqrt2" | "sqrt3" */
lowdisc_status lowdisc_cf_named(const char* name, int32_t max_terms, lowdisc_cf** out);
void lowdisc_cf_free(lowdisc_cf* cf);
int32_t lowdisc_cf_terms(const lowdisc_cf* cf);
lowdisc_status lowdisc_cf_digit(const lowdisc_cf* cf, int32_t index, int64_t* out);
lowdisc_status lowdisc_cf_convergent(const lowdisc_cf* cf, int32_t index, int64_t* p, int64_t* q);
/* 1 when the expansion ended exactly (rational input). */
int lowdisc_cf_terminated(const lowdisc_cf* cf);
/* 1 when digits were cut at the precision budget of the input. */
int lowdisc_cf_truncated(const lowdisc_cf* cf);

/* Greedy Ostrowski digits of n: digits[k] multiplies q_k. digits must hold
 * lowdisc_cf_terms(cf) entries; *length receives the used count. */
lowdisc_status lowdisc_ostrowski(const lowdisc_cf* cf, int64_t n, int64_t* digits,
                                 int32_t* length);

double lowdisc_torus_norm(double x);

/* ------------------------------------------------------------------ */
/* Gap structure                                                      */

typedef struct lowdisc_gaps lowdisc_gaps;

lowdisc_status lowdisc_gaps_compute(const lowdisc_points* ps, double grouping_tolerance,
                                    lowdisc_gaps** out);
void lowdisc_gaps_free(lowdisc_gaps* gaps);
int32_t lowdisc_gaps_count(const lowdisc_gaps* gaps);
lowdisc_status lowdisc_gaps_get(const lowdisc_gaps* gaps, int32_t index, double* length,
                                int64_t* multiplicity);
int lowdisc_gaps_has_duplicates(const lowdisc_gaps* gaps);

typedef struct lowdisc_three_gap_prediction {
  double l1, l2, l3;
  int64_t n1, n2, n3;
  int64_t n2_literal; /* uncorrected textbook multiplicity, for comparison */
  int32_t degenerate; /* n == 1 */
} lowdisc_three_gap_prediction;

/* spec must be a 1-d Kronecker specification. */
lowdisc_status lowdisc_three_gap_predict(const lowdisc_spec* spec, int64_t n,
                                         lowdisc_three_gap_prediction* out);

/* JSON report of gap-family trajectories N^alpha L and trichotomy labels
 * over the given N values. */
lowdisc_status lowdisc_classify_gaps(const lowdisc_spec* spec, double alpha,
                                     const int64_t* n_list, int32_t n_count, char** json_out);
/* JSON report of the two pair-correlation obstructions. */
lowdisc_status lowdisc_check_obstructions(const lowdisc_spec* spec, double alpha,
                                          const int64_t* n_list, int32_t n_count,
                                          char** json_out);

/* ------------------------------------------------------------------ */
/* Pair correlations                                                  */

typedef struct lowdisc_pc_point {
  int64_t n;
  double s;
  double alpha;
  int32_t dimension;
  int64_t raw_count;   /* ordered pairs */
  double ball_volume;  /* min(2 s N^-alpha, 1)^d */
  double value;        /* raw_count / (N^2 ball_volume) */
  int32_t saturated;   /* s N^-alpha >= 1/2 */
} lowdisc_pc_point;

lowdisc_status lowdisc_pair_count(const lowdisc_points* ps, double radius, int strict,
                                  int64_t* out);
lowdisc_status lowdisc_pair_correlation(const lowdisc_points* ps, double s, double alpha,
                                        int strict, lowdisc_pc_point* out);
/* F(K, N): max_{s<=K} |count(< s/N^alpha)/(2s) - N^{2-alpha}|. */
lowdisc_status lowdisc_deviation_statistic(const lowdisc_points* ps, int64_t k, double alpha,
                                           double* out);

/* ------------------------------------------------------------------ */
/* Discrepancy                                                        */

typedef struct lowdisc_disc_report {
  int64_t n;
  int32_t dimension;
  double star;
  double extreme;        /* NaN unless d == 1 */
  int32_t method;        /* 0 exact_1d, 1 grid_md */
  double witness_b[3];   /* anchored box [0, b); unused entries 0 */
  int32_t witness_closed;
  double witness_deviation;
} lowdisc_disc_report;

lowdisc_status lowdisc_star_discrepancy(const lowdisc_points* ps, lowdisc_disc_report* out);
lowdisc_status lowdisc_extreme_discrepancy_1d(const lowdisc_points* ps, double* out);
/* Randomized-box probe: a guaranteed lower bound on the star discrepancy. */
lowdisc_status lowdisc_star_discrepancy_lower_bound(const lowdisc_points* ps, int64_t boxes,
                                                    uint64_t seed, double* out);

typedef struct lowdisc_gap_bound_report {
  int64_t n;
  int32_t gap_classes;
  double r;        /* N L_K - 2 */
  double epsilon;  /* max_{j,k} |n_k(j) - (N_k/N) j| */
  double bound;    /* (R+3)/N + epsilon sum L_k */
  double measured_star;
  int32_t satisfied;
} lowdisc_gap_bound_report;

lowdisc_status lowdisc_gap_bound(const lowdisc_points* ps, lowdisc_gap_bound_report* out);

typedef struct lowdisc_pc_bound_report {
  int64_t n;
  double alpha;
  int64_t k;       /* window parameter; F is evaluated at K^2 */
  double f_value;
  double bound;    /* 5 max(N^{1-alpha/5}, sqrt(N^alpha F(K^2, N))) */
  double measured; /* N^alpha D*_N */
  int32_t satisfied;
} lowdisc_pc_bound_report;

/* k = 0 selects floor(N^{2 alpha / 5}). */
lowdisc_status lowdisc_pc_bound(const lowdisc_points* ps, double alpha, int64_t k,
                                lowdisc_pc_bound_report* out);

/* ------------------------------------------------------------------ */
/* Verification suites and configs                                    */

/* Canonical form of a JSON config document (stable keys, defaults filled). */
lowdisc_status lowdisc_config_canonical(const char* config_json, char** out);

/* N grammar: "<n>" or "<a>:<b>:<geomsteps>" (geometric, inclusive). Writes at
 * most capacity values and the produced count. */
lowdisc_status lowdisc_parse_n(const char* text, int64_t* out, int32_t capacity,
                               int32_t* count);

/* suite_id: three_gap | ostrowski | number_variance | ppc_failure |
 * gap_bound | pc_bound | vdc_low_discrepancy | kronecker_low_discrepancy |
 * obstruction. config_json may be "" or "{}" for defaults. The JSON result
 * reports per-case pass/fail/inconclusive with margins; *failures and
 * *inconclusive receive the counts. */
lowdisc_status lowdisc_verify_run(const char* suite_id, const char* config_json,
                                  char** json_out, int32_t* failures, int32_t* inconclusive);

/* CSV rendering of one or more verify result documents (JSON array or single
 * object as produced by lowdisc_verify_run). */
lowdisc_status lowdisc_verify_render_csv(const char* results_json, char** csv_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LOWDISC_LOWDISC_H */
