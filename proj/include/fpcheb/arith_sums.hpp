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

#include "fpcheb/interval.hpp"
#include "fpcheb/poly.hpp"

namespace fpcheb {

// sum_{a in I} prod_j mu(f + h_j + a).
i64 chowla_sum(const Poly& f, std::span<const Residue> shifts, const IntervalFp& interval);

enum class DivisorSumMode {
  shifted,     // sum d_r(f + a) d_r(f + 1 + a)
  titchmarsh,  // sum [f + a irreducible] d_r(f + 1 + a)
};

u64 divisor_sum(const Poly& f, int r, const IntervalFp& interval, DivisorSumMode mode);

struct TrinomialSweep {
  u64 count = 0;
  u64 pairs = 0;
  double main_term = 0;  // |I0| |I1| / d
  double density_ratio = 0;
};

// Irreducible x^d + a1 x + a0 over (a0, a1) in I0 x I1; iterates a1 and
// counts along a0.
TrinomialSweep trinomial_sweep(const PrimeModulus& modulus, int d, const IntervalFp& i0,
                               const IntervalFp& i1, unsigned workers = 1);

}  // namespace fpcheb
