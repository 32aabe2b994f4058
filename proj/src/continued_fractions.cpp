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

#include "continued_fractions.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace lowdisc {

using boost::multiprecision::cpp_int;

namespace {

constexpr std::int64_t kInt64Cap = std::numeric_limits<std::int64_t>::max();

bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t* out) {
  return !__builtin_mul_overflow(a, b, out);
}

bool checked_add(std::int64_t a, std::int64_t b, std::int64_t* out) {
  return !__builtin_add_overflow(a, b, out);
}

// p_n = a_n p_{n-1} + p_{n-2}; returns false on 64-bit overflow.
bool step_recurrence(std::int64_t a, std::int64_t prev, std::int64_t prev2, std::int64_t* out) {
  std::int64_t t;
  if (!checked_mul(a, prev, &t)) return false;
  return checked_add(t, prev2, out);
}

// Exact rational of a finite double: mant * 2^exp with integer mant.
void decompose(double v, cpp_int* num, int* exp2) {
  int e = 0;
  double m = std::frexp(v, &e);  // v = m * 2^e, |m| in [0.5, 1)
  // 53 bits always suffice for the significand.
  double scaled = std::ldexp(m, 53);
  *num = cpp_int(static_cast<long long>(scaled));
  *exp2 = e - 53;
}

// Exact rational num/den (den = 2^k) of a double-double value.
void dd_to_rational(const DdReal& x, cpp_int* num, cpp_int* den) {
  cpp_int n1, n2;
  int e1 = 0, e2 = 0;
  decompose(x.hi, &n1, &e1);
  if (x.lo != 0.0) {
    decompose(x.lo, &n2, &e2);
  } else {
    n2 = 0;
    e2 = e1;
  }
  int emin = std::min(e1, e2);
  cpp_int total = (n1 << (e1 - emin)) + (n2 << (e2 - emin));
  if (emin >= 0) {
    *num = total << emin;
    *den = 1;
  } else {
    *num = total;
    *den = cpp_int(1) << (-emin);
  }
}

cpp_int floor_div(const cpp_int& a, const cpp_int& b) {
  cpp_int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

double torus_norm(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::domain, "torus_norm: non-finite input");
  double f = x - std::floor(x);
  if (f >= 1.0) f -= 1.0;  // floor rounding edge
  return std::min(f, 1.0 - f);
}

DdReal torus_norm_of_multiple(const DdReal& z, std::int64_t q) {
  if (q < 0) q = -q;
  if (q > (std::int64_t{1} << 53))
    throw Error(ErrorCode::overflow, "torus_norm_of_multiple: q exceeds exact double range");
  return dd_torus_norm(dd_mul_d(z, static_cast<double>(q)));
}

CfExpansion cf_expand_dd(const DdReal& x, int max_terms, double tolerance, double eps_abs) {
  if (!std::isfinite(x.hi) || !std::isfinite(x.lo))
    throw Error(ErrorCode::domain, "cf_expand: non-finite input");
  if (max_terms < 1) throw Error(ErrorCode::invalid_argument, "cf_expand: max_terms must be >= 1");
  if (tolerance < 0.0) throw Error(ErrorCode::invalid_argument, "cf_expand: tolerance must be >= 0");

  CfExpansion cf;
  cf.value = x;

  cpp_int num, den;
  dd_to_rational(x, &num, &den);

  std::int64_t p_prev2 = 0, p_prev = 1;  // p_{-2}, p_{-1}
  std::int64_t q_prev2 = 1, q_prev = 0;  // q_{-2}, q_{-1}

  for (int n = 0; n < max_terms; ++n) {
    cpp_int a_big = floor_div(num, den);
    if (a_big > kInt64Cap || a_big < -kInt64Cap) {
      // The tail is astronomically close to an integer; beyond anything the
      // input precision supports.
      cf.digits_truncated = true;
      break;
    }
    std::int64_t a = static_cast<std::int64_t>(a_big);

    std::int64_t p, q;
    if (!step_recurrence(a, p_prev, p_prev2, &p) || !step_recurrence(a, q_prev, q_prev2, &q)) {
      cf.q_overflow = true;
      break;
    }

    if (n >= 1) {
      // Emit the digit only if the input's uncertainty interval cannot change
      // it: perturbations below 1/(2 q_{n-1} q_n) leave the cylinder intact.
      double qq = static_cast<double>(q_prev) * static_cast<double>(q);
      if (eps_abs > 0.0 && eps_abs >= 0.5 / qq) {
        cf.digits_truncated = true;
        break;
      }
    }

    cf.digits.push_back(a);
    cf.convergents.emplace_back(p, q);
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;

    cpp_int rem = num - a_big * den;
    if (rem == 0) {
      cf.terminated = true;
      break;
    }
    num = den;
    den = rem;

    // |x - p_n/q_n| <= 1/q_n^2, so the convergent already meets tolerance.
    if (tolerance > 0.0 && n >= 1) {
      double qd = static_cast<double>(q);
      if (1.0 / (qd * qd) <= tolerance) break;
    }
  }

  if (cf.digits.empty())
    throw Error(ErrorCode::internal, "cf_expand: no digits produced");
  return cf;
}

CfExpansion cf_expand(double x, int max_terms, double tolerance) {
  if (!std::isfinite(x)) throw Error(ErrorCode::domain, "cf_expand: non-finite input");
  double eps = std::abs(x) > 0 ? std::abs(x) * std::numeric_limits<double>::epsilon()
                               : std::numeric_limits<double>::denorm_min();
  return cf_expand_dd(dd_from(x), max_terms, tolerance, eps);
}

bool cf_has_named(const std::string& name) {
  return name == "phi" || name == "sqrt2" || name == "sqrt3";
}

DdReal dd_named(const std::string& name) {
  if (name == "phi") return dd_phi();
  if (name == "sqrt2") return dd_sqrt2();
  if (name == "sqrt3") return dd_sqrt3();
  throw Error(ErrorCode::invalid_argument, "unknown named constant: " + name);
}

CfExpansion cf_named(const std::string& name, int max_terms) {
  if (max_terms < 1) throw Error(ErrorCode::invalid_argument, "cf_named: max_terms must be >= 1");
  std::vector<std::int64_t> digits;
  DdReal value;
  if (name == "phi") {
    value = dd_phi();
    digits.assign(static_cast<std::size_t>(max_terms), 1);
  } else if (name == "sqrt2") {
    value = dd_sqrt2();
    digits.assign(static_cast<std::size_t>(max_terms), 2);
    digits[0] = 1;
  } else if (name == "sqrt3") {
    // [1; 1, 2, 1, 2, ...]
    value = dd_sqrt3();
    digits.resize(static_cast<std::size_t>(max_terms));
    digits[0] = 1;
    for (int i = 1; i < max_terms; ++i) digits[static_cast<std::size_t>(i)] = (i % 2 == 1) ? 1 : 2;
  } else {
    throw Error(ErrorCode::invalid_argument, "cf_named: unknown constant: " + name);
  }

  CfExpansion cf;
  cf.value = value;
  ConvergentResult conv = convergents_from_digits(digits);
  if (conv.overflow_at >= 0) {
    digits.resize(static_cast<std::size_t>(conv.overflow_at));
    cf.q_overflow = true;
  }
  cf.digits = std::move(digits);
  cf.convergents = std::move(conv.pairs);
  return cf;
}

ConvergentResult convergents_from_digits(const std::vector<std::int64_t>& digits) {
  if (digits.empty()) throw Error(ErrorCode::invalid_argument, "convergents: empty digit list");
  ConvergentResult r;
  std::int64_t p_prev2 = 0, p_prev = 1;
  std::int64_t q_prev2 = 1, q_prev = 0;
  for (std::size_t n = 0; n < digits.size(); ++n) {
    if (n >= 1 && digits[n] < 1)
      throw Error(ErrorCode::invalid_argument, "convergents: partial quotients must be positive for n >= 1");
    std::int64_t p, q;
    if (!step_recurrence(digits[n], p_prev, p_prev2, &p) ||
        !step_recurrence(digits[n], q_prev, q_prev2, &q)) {
      r.overflow_at = static_cast<int>(n);
      return r;
    }
    r.pairs.emplace_back(p, q);
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  return r;
}

OstrowskiDigits ostrowski_expand(std::int64_t n, const CfExpansion& cf) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "ostrowski_expand: N must be >= 1");
  if (cf.convergents.empty())
    throw Error(ErrorCode::insufficient_data, "ostrowski_expand: expansion has no convergents");

  // Largest stored index with q_m <= N; a strictly larger q must exist so the
  // greedy digit at the top is bounded.
  int m = -1;
  for (std::size_t k = 0; k < cf.convergents.size(); ++k) {
    if (cf.convergents[k].second <= n) m = static_cast<int>(k);
  }
  if (m < 0) throw Error(ErrorCode::internal, "ostrowski_expand: q_0 != 1");
  if (m + 1 >= static_cast<int>(cf.convergents.size()))
    throw Error(ErrorCode::insufficient_data,
                "ostrowski_expand: expand cf further (no stored convergent exceeds N)");

  OstrowskiDigits o;
  o.n = n;
  o.digits.assign(static_cast<std::size_t>(m) + 1, 0);
  std::int64_t rem = n;
  for (int k = m; k >= 0; --k) {
    std::int64_t q = cf.convergents[static_cast<std::size_t>(k)].second;
    std::int64_t b = rem / q;
    o.digits[static_cast<std::size_t>(k)] = b;
    rem -= b * q;
    if (b > 0 && o.top_index < 0) o.top_index = k;
  }
  if (rem != 0) throw Error(ErrorCode::internal, "ostrowski_expand: greedy residue nonzero");
  return o;
}

std::string ostrowski_validate(const OstrowskiDigits& o, const CfExpansion& cf) {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < o.digits.size(); ++k) {
    std::int64_t q = cf.convergents[k].second;
    std::int64_t t;
    if (!checked_mul(o.digits[k], q, &t) || !checked_add(sum, t, &sum))
      return "overflow while reconstructing N";
    (void)t;
  }
  if (sum != o.n) return "digits do not sum back to N";
  for (std::size_t k = 0; k < o.digits.size(); ++k) {
    if (o.digits[k] < 0) return "negative digit";
    if (k == 0) {
      // b_0 < a_1 in the canonical greedy expansion.
      if (cf.digits.size() > 1 && o.digits[0] > cf.digits[1] - 1) return "b_0 exceeds a_1 - 1";
    } else {
      if (k + 1 < cf.digits.size() && o.digits[k] > cf.digits[k + 1]) return "b_k exceeds a_{k+1}";
      if (k + 1 < cf.digits.size() && o.digits[k] == cf.digits[k + 1] && o.digits[k - 1] != 0)
        return "b_{k-1} nonzero below a saturated digit";
    }
  }
  return std::string();
}

}  // namespace lowdisc
