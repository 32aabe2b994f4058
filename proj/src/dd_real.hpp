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

#ifndef LOWDISC_DD_REAL_HPP
#define LOWDISC_DD_REAL_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace lowdisc {

/// Double-double value: the unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
/// giving roughly 31 significant decimal digits. Used wherever plain doubles
/// would not resolve gap lengths or torus norms at the comparison tolerances
/// this library guarantees (fractional parts of n*z up to n ~ 1e6, norms of
/// q_n*z for convergent denominators q_n up to ~1e6).
struct DdReal {
  double hi = 0.0;
  double lo = 0.0;
};

inline DdReal dd_from(double x) { return {x, 0.0}; }

// Error-free transforms (Knuth / Dekker, product via FMA).
inline DdReal dd_two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DdReal dd_quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DdReal dd_two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DdReal dd_add(const DdReal& a, const DdReal& b) {
  DdReal s = dd_two_sum(a.hi, b.hi);
  DdReal t = dd_two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = dd_quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return dd_quick_two_sum(s.hi, s.lo);
}

inline DdReal dd_neg(const DdReal& a) { return {-a.hi, -a.lo}; }

inline DdReal dd_sub(const DdReal& a, const DdReal& b) { return dd_add(a, dd_neg(b)); }

inline DdReal dd_mul_d(const DdReal& a, double b) {
  DdReal p = dd_two_prod(a.hi, b);
  p.lo += a.lo * b;
  return dd_quick_two_sum(p.hi, p.lo);
}

inline DdReal dd_mul(const DdReal& a, const DdReal& b) {
  DdReal p = dd_two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return dd_quick_two_sum(p.hi, p.lo);
}

inline bool dd_less(const DdReal& a, const DdReal& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}

inline DdReal dd_abs(const DdReal& a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? dd_neg(a) : a; }

inline double dd_to_double(const DdReal& a) { return a.hi + a.lo; }

// floor(hi + lo). When hi is not integral the low word cannot move the value
// across an integer (|lo| <= ulp(hi)/2), so floor(hi) is exact.
inline DdReal dd_floor(const DdReal& a) {
  double fh = std::floor(a.hi);
  if (fh != a.hi) return {fh, 0.0};
  return dd_quick_two_sum(fh, std::floor(a.lo));
}

/// Fractional part, normalized into [0, 1).
inline DdReal dd_frac(const DdReal& a) {
  DdReal f = dd_sub(a, dd_floor(a));
  if (f.hi >= 1.0) f = dd_sub(f, dd_from(1.0));
  if (f.hi < 0.0) f = dd_add(f, dd_from(1.0));
  return f;
}

/// Distance to the nearest integer, in [0, 1/2].
inline DdReal dd_torus_norm(const DdReal& a) {
  DdReal f = dd_frac(a);
  DdReal g = dd_sub(dd_from(1.0), f);
  return dd_less(f, g) ? f : g;
}

/// Fractional part collapsed to a double in [0, 1).
inline double dd_frac_to_double(const DdReal& a) {
  DdReal f = dd_frac(a);
  double v = f.hi + f.lo;
  if (v >= 1.0) v = std::nextafter(1.0, 0.0);
  if (v < 0.0) v = 0.0;
  return v;
}

/// sqrt of a small non-negative integer with one Newton correction step;
/// accurate to the full double-double precision.
inline DdReal dd_sqrt_of_int(double m) {
  if (m == 0.0) return dd_from(0.0);
  double s = std::sqrt(m);
  double e = std::fma(-s, s, m);
  return dd_quick_two_sum(s, e / (2.0 * s));
}

inline DdReal dd_phi() { return dd_mul_d(dd_add(dd_sqrt_of_int(5.0), dd_from(1.0)), 0.5); }
inline DdReal dd_sqrt2() { return dd_sqrt_of_int(2.0); }
inline DdReal dd_sqrt3() { return dd_sqrt_of_int(3.0); }

/// Parse a decimal string through long double, keeping whatever precision
/// beyond a plain double the platform's long double carries.
inline DdReal dd_from_string(const std::string& s, bool* ok = nullptr) {
  char* end = nullptr;
  long double v = std::strtold(s.c_str(), &end);
  bool good = end != nullptr && *end == '\0' && end != s.c_str();
  if (ok) *ok = good;
  double hi = static_cast<double>(v);
  double lo = static_cast<double>(v - static_cast<long double>(hi));
  return dd_quick_two_sum(hi, lo);
}

}  // namespace lowdisc

#endif  // LOWDISC_DD_REAL_HPP
