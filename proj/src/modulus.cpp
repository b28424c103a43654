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

#include "fpcheb/modulus.hpp"

#include <string>

#include "fpcheb/errors.hpp"

namespace fpcheb {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod_u64(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(u64 p) : p_(p), small_(p < (1ULL << 32U)) {
  if (p < 3) {
    throw PreconditionError("modulus must be an odd prime >= 3, got " +
                            std::to_string(p));
  }
  if (p >= (1ULL << 63U)) {
    throw PreconditionError("modulus must be below 2^63");
  }
  if (!is_prime_u64(p)) {
    throw PreconditionError("modulus is not prime: " + std::to_string(p));
  }
}

Residue PrimeModulus::from_signed(i64 x) const noexcept {
  if (x >= 0) return static_cast<u64>(x) % p_;
  const u64 mag = static_cast<u64>(-(x + 1)) + 1;
  return neg(mag % p_);
}

Residue PrimeModulus::pow(Residue base, u64 exponent) const noexcept {
  Residue r = 1;
  while (exponent != 0) {
    if (exponent & 1U) r = mul(r, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return r;
}

Residue PrimeModulus::inv(Residue a) const {
  if (a == 0) throw PreconditionError("inverse of zero residue");
  i64 t = 0;
  i64 new_t = 1;
  i64 r = static_cast<i64>(p_);
  i64 new_r = static_cast<i64>(a);
  while (new_r != 0) {
    const i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_signed(t);
}

thread_local MulCounter* detail::active_counter = nullptr;

CountingScope::CountingScope(MulCounter& counter)
    : previous_(detail::active_counter) {
  detail::active_counter = &counter;
}

CountingScope::~CountingScope() { detail::active_counter = previous_; }

}  // namespace fpcheb
