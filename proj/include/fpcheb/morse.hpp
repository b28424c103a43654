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

#include "fpcheb/poly.hpp"

namespace fpcheb {

enum class ShapeKind { additive_constant, linear_term, monomial, general };

// A one-parameter family f_a = base + a * direction with direction one of
// 1, x, x^m (2 <= m < d) or an arbitrary g with deg g < d.
class FamilyShape {
 public:
  static FamilyShape additive_constant(Poly base);
  static FamilyShape linear_term(Poly base);
  // m == 1 yields a linear_term shape.
  static FamilyShape monomial(Poly base, int m);
  static FamilyShape general(Poly base, Poly g);
  // "add-const", "linear", "monomial:<m>" or "general:<poly text>".
  static FamilyShape parse(std::string_view spec, Poly base);

  ShapeKind kind() const noexcept { return kind_; }
  const Poly& base() const noexcept { return base_; }
  const Poly& direction() const noexcept { return direction_; }
  int degree() const noexcept { return base_.degree(); }
  const PrimeModulus& modulus() const noexcept { return base_.modulus(); }

  Poly member(Residue a) const;
  // Family with the coefficient that parametrizes its exceptional set fixed:
  // the linear coefficient for additive_constant, the constant term otherwise.
  FamilyShape with_fixed(Residue value) const;
  std::string label() const;

 private:
  FamilyShape(ShapeKind kind, Poly base, Poly direction);

  ShapeKind kind_;
  Poly base_;
  Poly direction_;
};

// R(y) = Res_x(f'(x), y - f(x)) = lc(f')^d * prod_{f'(c)=0} (y - f(c)).
// Requires f monic of degree d >= 2 and p > d + 1.
Poly critical_value_polynomial(const Poly& f);

// f' has d-1 distinct roots and the d-1 critical values are distinct.
bool is_morse_polynomial(const Poly& f);

// gcd(f_circ', g') = 1 and f_circ'' != 0, for 1 <= deg g < deg f_circ.
bool geyer_condition(const Poly& f_circ, const Poly& g);

// Affine critical points of f/g: roots of W = f'g - fg' that are not poles.
// Morse when these are simple and their values f/g are pairwise distinct.
// For squarefree g no root of W is a pole, and for g = 1 this is exactly
// is_morse_polynomial.
bool is_morse_rational(const Poly& f, const Poly& g);

// Morse certification of the cover behind a family: f_a = base + a*g has
// Galois group S_d over F_p(t) when base/g is Morse.
bool certify_symmetric(const FamilyShape& shape);

struct BadSet {
  u64 p = 0;
  int d = 0;
  std::string shape;
  std::vector<Residue> bad;

  std::size_t size() const noexcept { return bad.size(); }
};

struct BadSetOptions {
  u64 scan_limit = 1'000'000;
  unsigned workers = 1;
};

// Exceptional set by exhaustive scan:
//   additive_constant, linear_term: {s : base + s*x is not Morse}
//   monomial(m):  {a0 : base with constant term a0, over x^m, not Morse};
//                 needs a nonzero linear coefficient in base
//   general(g):   {a0 : gcd(f_a0, g) != 1 or f_a0/g not Morse}
BadSet bad_set(const FamilyShape& shape, const BadSetOptions& options = {});

// g with f(x) = g(x^m) when every exponent carrying a nonzero coefficient is
// a multiple of m.
std::optional<Poly> decomposition_witness(const Poly& f, int m);

// First x^d + c1*x + c0 (c1 = 1, 2, ...; c0 = 0, 1, ...) that is Morse.
Poly find_morse_polynomial(const PrimeModulus& modulus, int d);

}  // namespace fpcheb
