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

#include "fpcheb/artin.hpp"

#include <set>

#include "fpcheb/errors.hpp"
#include "fpcheb/factor.hpp"

namespace fpcheb {

namespace {

void require_one_mod_three(const PrimeModulus& modulus) {
  if (modulus.value() % 3 != 1) {
    throw PreconditionError("cubic classes need p = 1 mod 3, got p=" +
                            std::to_string(modulus.value()));
  }
}

void require_omega(const PrimeModulus& modulus, Residue omega) {
  if (omega >= modulus.value() || omega == 1 || modulus.pow(omega, 3) != 1) {
    throw PreconditionError("omega=" + std::to_string(omega) +
                            " is not a primitive cube root of unity");
  }
}

}  // namespace

Residue primitive_cube_root(const PrimeModulus& modulus) {
  require_one_mod_three(modulus);
  const u64 e = (modulus.value() - 1) / 3;
  for (Residue g = 2; g < modulus.value(); ++g) {
    const Residue w = modulus.pow(g, e);
    if (w != 1) return w < modulus.mul(w, w) ? w : modulus.mul(w, w);
  }
  throw InvariantViolation("cube root of unity", "none found");
}

int cubic_artin_class(const PrimeModulus& modulus, Residue c, Residue omega) {
  require_one_mod_three(modulus);
  require_omega(modulus, omega);
  c = modulus.reduce(c);
  if (c == 0) throw PreconditionError("x^3 + c is not squarefree for c = 0");
  const Residue chi = modulus.pow(modulus.neg(c), (modulus.value() - 1) / 3);
  if (chi == 1) return 0;
  if (chi == omega) return 1;
  if (chi == modulus.mul(omega, omega)) return 2;
  throw InvariantViolation("cubic character", "value outside mu_3");
}

JointCubicCensus joint_cubic_census(const PrimeModulus& modulus,
                                    std::span<const Residue> shifts, const IntervalFp& interval,
                                    Residue omega) {
  require_one_mod_three(modulus);
  require_omega(modulus, omega);
  if (!(interval.modulus() == modulus)) throw PreconditionError("interval modulus mismatch");
  if (shifts.empty()) throw PreconditionError("joint cubic census needs at least one shift");
  std::set<Residue> seen;
  for (Residue h : shifts) {
    if (!seen.insert(modulus.reduce(h)).second) {
      throw PreconditionError("duplicate shift " + std::to_string(h));
    }
  }
  JointCubicCensus out;
  out.p = modulus.value();
  out.omega = omega;
  for (Residue h : shifts) out.shifts.push_back(modulus.reduce(h));
  const std::size_t k = shifts.size();
  std::vector<int> cell(k, 0);
  // Pre-create all 3^k cells.
  while (true) {
    out.counts[cell] = 0;
    std::size_t i = 0;
    while (i < k && cell[i] == 2) cell[i++] = 0;
    if (i == k) break;
    ++cell[i];
  }
  const u64 e = (modulus.value() - 1) / 3;
  const Residue omega2 = modulus.mul(omega, omega);
  for (u64 i = 0; i < interval.size(); ++i) {
    const Residue a = interval[i];
    bool skip = false;
    for (std::size_t j = 0; j < k; ++j) {
      const Residue c = modulus.add(out.shifts[j], a);
      if (c == 0) {
        skip = true;
        break;
      }
      const Residue chi = modulus.pow(modulus.neg(c), e);
      cell[j] = chi == 1 ? 0 : chi == omega ? 1 : chi == omega2 ? 2 : -1;
      if (cell[j] < 0) throw InvariantViolation("cubic character", "value outside mu_3");
    }
    if (skip) {
      ++out.skipped;
      continue;
    }
    ++out.counts[cell];
  }
  return out;
}

Residue artin_schreier_symbol(const PrimeModulus& modulus, Residue a) {
  a = modulus.reduce(a);
  const u64 p = modulus.value();
  if (p <= 13) {
    std::vector<Residue> c(p + 1, 0);
    c[p] = 1;
    c[1] = modulus.neg(1);
    c[0] = modulus.neg(a);
    const Poly f(modulus, std::move(c));
    const FactorizationType type = factorization_type(f);
    if (a == 0) {
      if (type != FactorizationType(std::vector<int>(p, 1))) {
        throw InvariantViolation("Artin-Schreier splitting",
                                 "x^p - x does not split over F_" + std::to_string(p));
      }
    } else if (!rabin_irreducible(f) || type.parts() != 1) {
      throw InvariantViolation("Artin-Schreier irreducibility",
                               "x^p - x - " + std::to_string(a) + " is reducible over F_" +
                                   std::to_string(p));
    }
  }
  return a;
}

}  // namespace fpcheb
