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

#include <map>
#include <span>
#include <vector>

#include "fpcheb/interval.hpp"

namespace fpcheb {

// Smallest primitive cube root of unity in F_p; needs p = 1 mod 3.
Residue primitive_cube_root(const PrimeModulus& modulus);

// j in {0, 1, 2} with (-c)^((p-1)/3) = omega^j: the A_3 Artin class of
// x^3 + c. j = 0 exactly when x^3 + c splits; 1 and 2 tell the two 3-cycles
// apart relative to the fixed omega.
int cubic_artin_class(const PrimeModulus& modulus, Residue c, Residue omega);

struct JointCubicCensus {
  u64 p = 0;
  std::vector<Residue> shifts;
  Residue omega = 0;
  // Every cell of (Z/3)^k is present, including empty ones.
  std::map<std::vector<int>, u64> counts;
  // a with h_i + a = 0 for some i.
  u64 skipped = 0;
};

// Tallies (class(h_1 + a), ..., class(h_k + a)) over a in I.
JointCubicCensus joint_cubic_census(const PrimeModulus& modulus,
                                    std::span<const Residue> shifts, const IntervalFp& interval,
                                    Residue omega);

// Artin symbol of (t - a) in the extension x^p - x - t, read in F_p^+.
// For p <= 13 also checks that x^p - x - a splits for a = 0 and is
// irreducible otherwise, throwing InvariantViolation if not.
Residue artin_schreier_symbol(const PrimeModulus& modulus, Residue a);

}  // namespace fpcheb
