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

#include "fpcheb/arith_sums.hpp"

#include <set>

#include "fpcheb/census.hpp"
#include "fpcheb/errors.hpp"
#include "fpcheb/factor.hpp"

namespace fpcheb {

namespace {

Poly add_constant(const Poly& f, Residue c) {
  return f.with_coeff(0, f.modulus().add(f.coeff(0), f.modulus().reduce(c)));
}

void require_family_base(const Poly& f, const IntervalFp& interval) {
  if (!f.is_monic() || f.degree() < 1) {
    throw PreconditionError("sum needs a monic nonconstant f, got " + f.to_text());
  }
  if (!(f.modulus() == interval.modulus())) {
    throw PreconditionError("interval modulus differs from the polynomial's");
  }
}

}  // namespace

i64 chowla_sum(const Poly& f, std::span<const Residue> shifts, const IntervalFp& interval) {
  require_family_base(f, interval);
  if (shifts.empty()) throw PreconditionError("chowla_sum needs at least one shift");
  std::set<Residue> seen;
  for (Residue h : shifts) {
    if (!seen.insert(f.modulus().reduce(h)).second) {
      throw PreconditionError("duplicate shift " + std::to_string(h));
    }
  }
  i64 total = 0;
  for (u64 i = 0; i < interval.size(); ++i) {
    const Residue a = interval[i];
    int product = 1;
    for (Residue h : shifts) {
      product *= moebius(add_constant(f, f.modulus().add(f.modulus().reduce(h), a)));
      if (product == 0) break;
    }
    total += product;
  }
  return total;
}

u64 divisor_sum(const Poly& f, int r, const IntervalFp& interval, DivisorSumMode mode) {
  if (r < 2) throw PreconditionError("divisor sums need r >= 2");
  require_family_base(f, interval);
  u64 total = 0;
  for (u64 i = 0; i < interval.size(); ++i) {
    const Residue a = interval[i];
    const Poly fa = add_constant(f, a);
    const u64 left = mode == DivisorSumMode::shifted ? divisor_function(fa, r)
                                                     : (rabin_irreducible(fa) ? 1 : 0);
    if (left == 0) continue;
    total += left * divisor_function(add_constant(fa, 1), r);
  }
  return total;
}

TrinomialSweep trinomial_sweep(const PrimeModulus& modulus, int d, const IntervalFp& i0,
                               const IntervalFp& i1, unsigned workers) {
  if (d < 2) throw PreconditionError("trinomial_sweep needs d >= 2");
  if (modulus.value() <= static_cast<u64>(d) + 1) {
    throw PreconditionError("trinomial_sweep needs p > d + 1");
  }
  const FamilyShape family = FamilyShape::additive_constant(Poly::monomial(modulus, d));
  TrinomialSweep out;
  for (u64 j = 0; j < i1.size(); ++j) {
    out.count += irreducible_interval_count(family, i1[j], i0, workers).count;
  }
  out.pairs = i0.size() * i1.size();
  out.main_term = static_cast<double>(out.pairs) / d;
  out.density_ratio = static_cast<double>(out.count) / out.main_term;
  return out;
}

}  // namespace fpcheb
