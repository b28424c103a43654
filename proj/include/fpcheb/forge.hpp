// Copyright 2026 The fpcheb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

#include "fpcheb/poly.hpp"

namespace fpcheb {

struct ForgeSchedule {
  // Linear-coefficient offsets in scan order. Empty means 0, 1, ..., b_prefix-1.
  std::vector<Residue> b_order;
  // Scan b_prefix values of b before doubling; 0 means 4d.
  int b_prefix = 0;
  // |I| = ceil(interval_factor * sqrt(p) * ln p), capped at p.
  double interval_factor = 2.0;
  Residue interval_start = 0;
  int max_doublings = 4;
};

struct ForgeReport {
  u64 p = 0;
  int d = 0;
  Poly base;
  Poly found;
  Residue b_used = 0;
  Residue a_used = 0;
  u64 rabin_calls = 0;
  u64 field_mults = 0;
  u64 interval_length = 0;
  int doublings = 0;
  double wall_seconds = 0;
  // field_mults / (sqrt(p) (ln p)^2)
  double budget_ratio = 0;

  explicit ForgeReport(const PrimeModulus& m) : base(m), found(m) {}
};

// Deterministic search for an irreducible f + b x + a: b runs through the
// schedule's order, a through the interval from interval_start, and the first
// hit in that lexicographic order is returned. When every b in the prefix
// fails the interval doubles, up to max_doublings times; exhaustion throws
// InvariantViolation. field_mults counts multiplications inside the
// polynomial kernels of the scan (not the final re-verification).
ForgeReport construct_irreducible(const Poly& f, const ForgeSchedule& schedule = {});

enum class BaseRule {
  monomial,  // x^d
  morse,     // find_morse_polynomial(p, d)
};

struct ScalingRow {
  ForgeReport report;
  double shoup_model = 0;  // sqrt(p) (ln p)^3, reference column only
};

struct ScalingTable {
  int d = 0;
  std::vector<ScalingRow> rows;
  // Least-squares fit of ln(field_mults) = slope * ln(p) + intercept.
  double slope = 0;
  double intercept = 0;
};

// Needs at least three primes with max/min >= 100. Cells are independent and
// run on up to `workers` threads.
ScalingTable cost_scaling_experiment(std::span<const u64> primes, int d, BaseRule rule,
                                     const ForgeSchedule& schedule = {}, unsigned workers = 1);

}  // namespace fpcheb
