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

#include <cstdint>

namespace fpcheb {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Residues are stored canonically in [0, p).
using Residue = u64;

// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime_u64(u64 n);

// Odd prime p < 2^63 with the field operations of F_p. Products use a 64-bit
// path when p < 2^32 and 128-bit intermediates otherwise.
class PrimeModulus {
 public:
  explicit PrimeModulus(u64 p);

  u64 value() const noexcept { return p_; }

  Residue reduce(u64 x) const noexcept { return x % p_; }
  Residue from_signed(i64 x) const noexcept;

  Residue add(Residue a, Residue b) const noexcept {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    if (small_) return a * b % p_;
    return static_cast<u64>(static_cast<u128>(a) * b % p_);
  }
  Residue pow(Residue base, u64 exponent) const noexcept;
  // Inverse by the extended Euclidean algorithm on integers. Throws
  // PreconditionError for a == 0.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
    return a.p_ == b.p_;
  }

 private:
  u64 p_;
  bool small_;
};

// Counts field multiplications performed inside polynomial kernels on the
// current thread while a CountingScope is alive. Scopes nest; the innermost
// one receives the tallies.
class MulCounter {
 public:
  u64 count() const noexcept { return count_; }
  void add(u64 n) noexcept { count_ += n; }
  void reset() noexcept { count_ = 0; }

 private:
  u64 count_ = 0;
};

class CountingScope {
 public:
  explicit CountingScope(MulCounter& counter);
  ~CountingScope();
  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

 private:
  MulCounter* previous_;
};

namespace detail {
extern thread_local MulCounter* active_counter;
inline void tally_mults(u64 n) noexcept {
  if (active_counter != nullptr) active_counter->add(n);
}
}  // namespace detail

}  // namespace fpcheb
