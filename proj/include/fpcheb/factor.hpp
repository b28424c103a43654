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

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "fpcheb/poly.hpp"

namespace fpcheb {

// Nondecreasing multiset of irreducible-factor degrees. A factor of
// multiplicity e contributes its degree e times, so the parts sum to deg f.
class FactorizationType {
 public:
  FactorizationType() = default;
  // Parts are sorted; each must be positive.
  explicit FactorizationType(std::vector<int> degrees);

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int total() const noexcept;
  std::size_t parts() const noexcept { return degrees_.size(); }
  // "1,2" style comma list.
  std::string label() const;
  static FactorizationType parse(std::string_view text);

  auto operator<=>(const FactorizationType&) const = default;

 private:
  std::vector<int> degrees_;
};

struct FactorPower {
  Poly factor;  // monic irreducible
  int exponent;
};

struct Factorization {
  Residue unit = 0;
  std::vector<FactorPower> factors;

  // unit * prod factor^exponent.
  Poly product(const PrimeModulus& modulus) const;
};

// (s_e, e) with f = prod s_e^e, each s_e squarefree monic and nonconstant.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// (g_k, k) for a squarefree monic f: g_k is the product of the irreducible
// factors of degree k. Only nonconstant slices are returned.
std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f);

// Rabin's test. x^(p^d) = x mod f and gcd(x^(p^(d/q)) - x, f) = 1 for every
// prime q | d. Costs one x^p computation (O(d^2 log p) multiplications) plus
// O(d^3) for the Frobenius matrix and its d applications.
bool rabin_irreducible(const Poly& f);

FactorizationType factorization_type(const Poly& f);

// Type of a squarefree monic f; skips the squarefree decomposition.
FactorizationType squarefree_factorization_type(const Poly& f);

// Cantor-Zassenhaus splitting, seeded from (p, coefficients, seed), so the
// result is a pure function of its arguments. Factors are returned sorted by
// degree, then coefficients.
Factorization full_factorization(const Poly& f, u64 seed = 0);

// 0 unless squarefree, else (-1)^(number of irreducible factors).
int moebius(const Poly& f);

// Number of ordered r-tuples of monic polynomials with product f.
u64 divisor_function(const Poly& f, int r);

}  // namespace fpcheb
