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

#include <random>

#include "fpcheb/poly.hpp"
#include "oracle.hpp"

namespace fpcheb::testing {

inline oracle::Vec to_vec(const Poly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }
inline Poly from_vec(const PrimeModulus& m, const oracle::Vec& v) { return Poly(m, v); }

inline Poly P(u64 p, std::initializer_list<i64> c) { return Poly::from_ints(PrimeModulus(p), c); }

// Random polynomial of exact degree n; monic when asked.
inline Poly random_poly(const PrimeModulus& m, int n, std::mt19937_64& rng, bool monic = true) {
  std::uniform_int_distribution<u64> coef(0, m.value() - 1), nonzero(1, m.value() - 1);
  std::vector<Residue> c(n + 1);
  for (int i = 0; i < n; ++i) c[i] = coef(rng);
  c[n] = monic ? 1 : nonzero(rng);
  return Poly(m, c);
}

inline Poly random_any(const PrimeModulus& m, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-1, max_deg);
  const int n = d(rng);
  if (n < 0) return Poly(m);
  return random_poly(m, n, rng, false);
}

}  // namespace fpcheb::testing
