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

#ifndef LOWDISC_SEQUENCES_HPP
#define LOWDISC_SEQUENCES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dd_real.hpp"

namespace lowdisc {

enum class SequenceKind { kronecker, van_der_corput, random_uniform };

/// Description of a point sequence in [0,1)^d. Parsed from / formatted to the
/// CLI grammar: kronecker:phi | kronecker:sqrt2 | kronecker:z=<dec>[,<dec>...]
/// | vdc:b=<int> | random:seed=<int>.
struct SequenceSpec {
  SequenceKind kind = SequenceKind::kronecker;
  int dimension = 1;

  // kronecker
  std::vector<DdReal> z;
  std::vector<std::string> z_names;  // non-empty entries for named constants
  bool z_exact = false;              // z carries full double-double precision

  // van der Corput
  std::int64_t base = 2;
  bool include_zeroth = false;  // prepend 0 as the zeroth element

  // random_uniform
  std::uint64_t seed = 0;
};

SequenceSpec spec_parse(const std::string& text);
std::string spec_format(const SequenceSpec& spec);

SequenceSpec make_kronecker(const std::vector<std::string>& names);
SequenceSpec make_kronecker_z(const std::vector<DdReal>& z, bool exact);
SequenceSpec make_vdc(std::int64_t base, bool include_zeroth = false);
SequenceSpec make_random(std::uint64_t seed, int dimension = 1);

/// N points in [0,1)^d stored row-major. Regenerating from the same spec and
/// N reproduces identical bytes.
struct PointSet {
  std::vector<double> data;
  std::int64_t n = 0;
  int dimension = 1;
  bool has_spec = false;
  SequenceSpec spec;

  double at(std::int64_t i, int j) const { return data[static_cast<std::size_t>(i) * dimension + j]; }
};

PointSet generate(const SequenceSpec& spec, std::int64_t n);
PointSet pointset_from_values(const std::vector<double>& values, int dimension = 1);

/// Sorted copy (d = 1 only).
PointSet sort_ascending(const PointSet& ps);

/// Radical-inverse g_b(n): the base-b digits of n mirrored around the point.
double radical_inverse(std::int64_t base, std::int64_t n);

/// Heuristic rationality warning for Kronecker parameters: true when the
/// continued fraction of some coordinate terminates or effectively terminates
/// within the input precision after only a few digits.
bool spec_near_rational_warning(const SequenceSpec& spec);

/// CSV export: one row per point, d columns, 17 significant digits.
std::string pointset_to_csv(const PointSet& ps);

}  // namespace lowdisc

#endif  // LOWDISC_SEQUENCES_HPP
