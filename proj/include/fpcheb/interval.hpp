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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpcheb/modulus.hpp"

namespace fpcheb {

// {M, M+1, ..., M+length-1} mod p, optionally mapped through i -> A*i + B.
// Stores the length, not the closed-interval endpoint offset. Enumeration
// wraps around p.
class IntervalFp {
 public:
  struct Progression {
    Residue step;    // A, nonzero
    Residue offset;  // B
  };

  IntervalFp(const PrimeModulus& modulus, Residue start, u64 length,
             std::optional<Progression> progression = std::nullopt);
  static IntervalFp full(const PrimeModulus& modulus);
  // "M:length" or "M:length:A:B".
  static IntervalFp parse(const PrimeModulus& modulus, std::string_view text);

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  Residue start() const noexcept { return start_; }
  u64 size() const noexcept { return length_; }
  const std::optional<Progression>& progression() const noexcept { return progression_; }

  Residue operator[](u64 i) const noexcept {
    const Residue base = modulus_.reduce(start_ + i % modulus_.value());
    if (!progression_) return base;
    return modulus_.add(modulus_.mul(progression_->step, base), progression_->offset);
  }
  std::vector<Residue> elements() const;
  // The element set {a - c : a in I}.
  IntervalFp translated_down(Residue c) const;
  std::string to_text() const;

 private:
  PrimeModulus modulus_;
  Residue start_;
  u64 length_;
  std::optional<Progression> progression_;
};

}  // namespace fpcheb
