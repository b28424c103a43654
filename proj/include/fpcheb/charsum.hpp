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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fpcheb/factor.hpp"
#include "fpcheb/interval.hpp"

namespace fpcheb {

// Character sums accumulate in double precision; p is capped here so the
// accumulated rounding stays far below the reported tolerances.
inline constexpr u64 kCharacterSumMaxP = 1'000'000;

// F(a) = 1 when f + a is squarefree with factorization type lambda.
struct ClassIndicator {
  u64 p = 0;
  FactorizationType lambda;
  std::vector<std::uint8_t> member;
  u64 count = 0;     // N_lambda
  u64 ramified = 0;  // a with disc(f + a) = 0
};

ClassIndicator class_indicator(const Poly& f, const FactorizationType& lambda,
                               unsigned workers = 1);

// e^(2 pi i k / p) for k in [0, p).
class RootsOfUnity {
 public:
  explicit RootsOfUnity(u64 p);
  const std::complex<double>& operator[](u64 k) const noexcept { return table_[k]; }
  u64 p() const noexcept { return table_.size(); }

 private:
  std::vector<std::complex<double>> table_;
};

// S(b) = sum over unramified a with type lambda of e^(2 pi i b a / p).
std::complex<double> twisted_class_sum(const Poly& f, const FactorizationType& lambda,
                                       Residue b);
std::complex<double> twisted_class_sum(const ClassIndicator& indicator,
                                       const RootsOfUnity& roots, Residue b);
// S(b) for every b in F_p; O(p^2).
std::vector<std::complex<double>> twisted_class_sums(const ClassIndicator& indicator);

struct ParsevalCheck {
  double lhs = 0;  // sum_b |S(b)|^2
  double rhs = 0;  // p * N_lambda
  double relative_error = 0;
  bool ok = false;
};
ParsevalCheck parseval_check(const ClassIndicator& indicator,
                             std::span<const std::complex<double>> sums,
                             double tolerance = 1e-3);

struct CompletedSum {
  u64 direct_count = 0;
  std::complex<double> reconstruction;  // sum_b hat1_I(b) S(b)
  double reconstruction_error = 0;      // |reconstruction - direct_count|
  double main_term = 0;                 // (|I| / p) N_lambda, the b = 0 term
  double tail_bound = 0;                // sum_{b != 0} |hat1_I(b)| |S(b)|
};

// Counts a in I with F(a) = 1 directly and through the additive-character
// expansion of the interval indicator; throws InvariantViolation if the two
// differ by 1e-3 or more.
CompletedSum completed_sum_decomposition(const Poly& f, const FactorizationType& lambda,
                                         const IntervalFp& interval);
CompletedSum completed_sum_decomposition(const ClassIndicator& indicator,
                                         std::span<const std::complex<double>> sums,
                                         const IntervalFp& interval);

}  // namespace fpcheb
