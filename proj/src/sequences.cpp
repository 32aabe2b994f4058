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

#include "sequences.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "continued_fractions.hpp"
#include "errors.hpp"

namespace lowdisc {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// Uniform double in [0,1) from the top 53 bits; bit-portable unlike
// std::uniform_real_distribution.
double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

void format_double(std::string* out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out->append(buf);
}

}  // namespace

SequenceSpec make_kronecker(const std::vector<std::string>& names) {
  SequenceSpec s;
  s.kind = SequenceKind::kronecker;
  s.dimension = static_cast<int>(names.size());
  s.z_exact = true;
  for (const auto& name : names) {
    s.z.push_back(dd_named(name));
    s.z_names.push_back(name);
  }
  return s;
}

SequenceSpec make_kronecker_z(const std::vector<DdReal>& z, bool exact) {
  SequenceSpec s;
  s.kind = SequenceKind::kronecker;
  s.dimension = static_cast<int>(z.size());
  s.z = z;
  s.z_names.assign(z.size(), std::string());
  s.z_exact = exact;
  return s;
}

SequenceSpec make_vdc(std::int64_t base, bool include_zeroth) {
  if (base < 2) throw Error(ErrorCode::invalid_argument, "van der Corput base must be >= 2");
  SequenceSpec s;
  s.kind = SequenceKind::van_der_corput;
  s.dimension = 1;
  s.base = base;
  s.include_zeroth = include_zeroth;
  return s;
}

SequenceSpec make_random(std::uint64_t seed, int dimension) {
  if (dimension < 1) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
  SequenceSpec s;
  s.kind = SequenceKind::random_uniform;
  s.dimension = dimension;
  s.seed = seed;
  return s;
}

SequenceSpec spec_parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::invalid_argument, "sequence spec needs the form kind:params: " + text);
  std::string kind = text.substr(0, colon);
  std::string params = text.substr(colon + 1);

  if (kind == "kronecker") {
    if (params.rfind("z=", 0) == 0) {
      std::vector<DdReal> z;
      for (const auto& part : split(params.substr(2), ',')) {
        bool ok = false;
        DdReal v = dd_from_string(part, &ok);
        if (!ok) throw Error(ErrorCode::invalid_argument, "bad kronecker coordinate: " + part);
        z.push_back(v);
      }
      if (z.empty()) throw Error(ErrorCode::invalid_argument, "kronecker:z= needs coordinates");
      return make_kronecker_z(z, false);
    }
    std::vector<std::string> names = split(params, ',');
    for (const auto& n : names)
      if (!cf_has_named(n))
        throw Error(ErrorCode::invalid_argument, "unknown kronecker constant: " + n);
    return make_kronecker(names);
  }
  if (kind == "vdc") {
    std::int64_t base = 0;
    bool zeroth = false;
    for (const auto& part : split(params, ',')) {
      if (part.rfind("b=", 0) == 0) {
        base = std::strtoll(part.c_str() + 2, nullptr, 10);
      } else if (part == "zeroth") {
        zeroth = true;
      } else {
        throw Error(ErrorCode::invalid_argument, "bad vdc parameter: " + part);
      }
    }
    if (base < 2) throw Error(ErrorCode::invalid_argument, "vdc needs b=<int> with b >= 2");
    return make_vdc(base, zeroth);
  }
  if (kind == "random") {
    std::uint64_t seed = 0;
    int dim = 1;
    for (const auto& part : split(params, ',')) {
      if (part.rfind("seed=", 0) == 0) {
        seed = std::strtoull(part.c_str() + 5, nullptr, 10);
      } else if (part.rfind("d=", 0) == 0) {
        dim = std::atoi(part.c_str() + 2);
      } else {
        throw Error(ErrorCode::invalid_argument, "bad random parameter: " + part);
      }
    }
    return make_random(seed, dim);
  }
  throw Error(ErrorCode::invalid_argument, "unknown sequence kind: " + kind);
}

std::string spec_format(const SequenceSpec& spec) {
  std::string out;
  switch (spec.kind) {
    case SequenceKind::kronecker: {
      out = "kronecker:";
      bool all_named = true;
      for (const auto& n : spec.z_names)
        if (n.empty()) all_named = false;
      if (all_named && !spec.z_names.empty()) {
        for (std::size_t i = 0; i < spec.z_names.size(); ++i) {
          if (i) out.push_back(',');
          out += spec.z_names[i];
        }
      } else {
        out += "z=";
        for (std::size_t i = 0; i < spec.z.size(); ++i) {
          if (i) out.push_back(',');
          format_double(&out, dd_to_double(spec.z[i]));
        }
      }
      break;
    }
    case SequenceKind::van_der_corput: {
      out = "vdc:b=" + std::to_string(spec.base);
      if (spec.include_zeroth) out += ",zeroth";
      break;
    }
    case SequenceKind::random_uniform: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "random:seed=%" PRIu64, spec.seed);
      out = buf;
      if (spec.dimension != 1) out += ",d=" + std::to_string(spec.dimension);
      break;
    }
  }
  return out;
}

double radical_inverse(std::int64_t base, std::int64_t n) {
  if (base < 2) throw Error(ErrorCode::invalid_argument, "radical_inverse: base must be >= 2");
  if (n < 0) throw Error(ErrorCode::invalid_argument, "radical_inverse: n must be >= 0");
  // Mirror the digits into an integer and divide once, so the first b^e - 1
  // points compare bit-for-bit equal to k/b^e computed the same way.
  std::int64_t rev = 0, scale = 1;
  while (n > 0) {
    if (rev > (std::numeric_limits<std::int64_t>::max() - (base - 1)) / base ||
        scale > std::numeric_limits<std::int64_t>::max() / base)
      throw Error(ErrorCode::overflow, "radical_inverse: index too large for exact digits");
    rev = rev * base + n % base;
    scale *= base;
    n /= base;
  }
  return static_cast<double>(rev) / static_cast<double>(scale);
}

PointSet generate(const SequenceSpec& spec, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "generate: N must be >= 1");
  if (spec.kind == SequenceKind::kronecker) {
    for (const DdReal& z : spec.z) {
      // The compensated product keeps the absolute error of {n z} near
      // n * 2^-105 |z|; for inexact (user-typed) z the meaningful precision
      // is one ulp of z, which caps usable N.
      double per_step = std::abs(dd_to_double(z)) *
                        (spec.z_exact ? 0x1.0p-105 : std::numeric_limits<double>::epsilon() * 0.5);
      if (per_step * static_cast<double>(n) > 1e-9)
        throw Error(ErrorCode::budget,
                    "generate: {n z} would lose more than 1e-9 absolute precision at this N; "
                    "use an exact (named or extended-precision) z");
    }
  }

  PointSet ps;
  ps.n = n;
  ps.dimension = spec.dimension;
  ps.has_spec = true;
  ps.spec = spec;
  ps.data.resize(static_cast<std::size_t>(n) * spec.dimension);

  switch (spec.kind) {
    case SequenceKind::kronecker: {
      for (int j = 0; j < spec.dimension; ++j) {
        const DdReal& z = spec.z[static_cast<std::size_t>(j)];
        for (std::int64_t i = 1; i <= n; ++i) {
          ps.data[static_cast<std::size_t>(i - 1) * spec.dimension + j] =
              dd_frac_to_double(dd_mul_d(z, static_cast<double>(i)));
        }
      }
      break;
    }
    case SequenceKind::van_der_corput: {
      std::int64_t start = spec.include_zeroth ? 0 : 1;
      for (std::int64_t i = 0; i < n; ++i)
        ps.data[static_cast<std::size_t>(i)] = radical_inverse(spec.base, start + i);
      break;
    }
    case SequenceKind::random_uniform: {
      std::mt19937_64 rng(spec.seed);
      for (auto& v : ps.data) v = to_unit(rng());
      break;
    }
  }
  return ps;
}

PointSet pointset_from_values(const std::vector<double>& values, int dimension) {
  if (dimension < 1) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
  if (values.empty() || values.size() % static_cast<std::size_t>(dimension) != 0)
    throw Error(ErrorCode::invalid_argument, "value count must be a positive multiple of dimension");
  for (double v : values)
    if (!(v >= 0.0 && v < 1.0))
      throw Error(ErrorCode::domain, "coordinates must lie in [0, 1)");
  PointSet ps;
  ps.data = values;
  ps.dimension = dimension;
  ps.n = static_cast<std::int64_t>(values.size()) / dimension;
  return ps;
}

PointSet sort_ascending(const PointSet& ps) {
  if (ps.dimension != 1)
    throw Error(ErrorCode::invalid_argument, "sort_ascending: defined for d = 1 only");
  PointSet out = ps;
  std::sort(out.data.begin(), out.data.end());
  return out;
}

bool spec_near_rational_warning(const SequenceSpec& spec) {
  if (spec.kind != SequenceKind::kronecker) return false;
  for (std::size_t j = 0; j < spec.z.size(); ++j) {
    if (!spec.z_names[j].empty()) continue;  // named constants are irrational
    double eps = std::abs(dd_to_double(spec.z[j])) *
                 (spec.z_exact ? 0x1.0p-104 : std::numeric_limits<double>::epsilon());
    CfExpansion cf = cf_expand_dd(spec.z[j], 12, 0.0, std::max(eps, 1e-300));
    if (cf.terminated || cf.digits_truncated) {
      if (cf.digits.size() < 12) return true;
    }
    // A giant early partial quotient means z is within ~1e-7 of a small
    // rational; the gap structure would look rational at desk scale.
    for (std::size_t i = 1; i < cf.digits.size() && i < 6; ++i)
      if (cf.digits[i] > 10'000'000) return true;
  }
  return false;
}

std::string pointset_to_csv(const PointSet& ps) {
  std::string out;
  out.reserve(static_cast<std::size_t>(ps.n) * 20 * ps.dimension);
  for (int j = 0; j < ps.dimension; ++j) {
    if (j) out.push_back(',');
    out += "x" + std::to_string(j + 1);
  }
  out.push_back('\n');
  for (std::int64_t i = 0; i < ps.n; ++i) {
    for (int j = 0; j < ps.dimension; ++j) {
      if (j) out.push_back(',');
      format_double(&out, ps.at(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace lowdisc
