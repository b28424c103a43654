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

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpcheb/modulus.hpp"

namespace fpcheb {

// Dense univariate polynomial over F_p; coefficient i multiplies x^i. The
// coefficient vector never carries trailing zeros, so the zero polynomial has
// no stored coefficients and degree -1.
class Poly {
 public:
  explicit Poly(PrimeModulus modulus) : modulus_(modulus) {}
  // Coefficients must already be residues in [0, p).
  Poly(PrimeModulus modulus, std::vector<Residue> coeffs);

  // Signed integer coefficients, reduced mod p. Lowest degree first.
  static Poly from_ints(PrimeModulus modulus, std::initializer_list<i64> coeffs);
  static Poly constant(PrimeModulus modulus, Residue c);
  static Poly monomial(PrimeModulus modulus, int degree, Residue c = 1);

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  u64 p() const noexcept { return modulus_.value(); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Residue coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  Residue eval(Residue x) const noexcept;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(Residue c) const;
  // Copy with coefficient i replaced by c.
  Poly with_coeff(int i, Residue c) const;
  // f(x + c).
  Poly shifted(Residue c) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }

  // Text form `p:<modulus>;<c0>,<c1>,...,<cd>`; the zero polynomial is
  // written with the single coefficient 0.
  std::string to_text() const;
  static Poly parse(std::string_view text);

 private:
  void trim() noexcept;

  PrimeModulus modulus_;
  std::vector<Residue> coeffs_;
};

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly rem(const Poly& f, const Poly& g);
// Quotient of an exact division; throws InvariantViolation if g does not divide f.
Poly exact_quotient(const Poly& f, const Poly& g);

// Monic gcd. gcd(f, 0) is the monic scaling of f.
Poly gcd(const Poly& f, const Poly& g);

struct Bezout {
  Poly gcd;  // monic
  Poly s;
  Poly t;  // s*f + t*g == gcd
};
Bezout xgcd(const Poly& f, const Poly& g);
// Inverse of a modulo m; throws PreconditionError when gcd(a, m) != 1.
Poly invert_mod(const Poly& a, const Poly& m);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, u64 exponent, const Poly& m);
// x^exponent mod m by square-and-multiply; the multiply step is a shift.
Poly x_pow_mod(u64 exponent, const Poly& m);

// x^(p^k) mod f by k successive p-th powerings. Uses
// O(k * deg(f)^2 * log p) field multiplications.
Poly frobenius_power(const Poly& f, int k);

// The p-power map h -> h^p on F_p[x]/(f), stored as the matrix whose row j
// is x^(j p) mod f. Applying it costs deg(f)^2 multiplications.
class FrobeniusMap {
 public:
  // x_to_p must be x^p mod f; f monic of degree >= 1.
  FrobeniusMap(const Poly& f, Poly x_to_p);
  explicit FrobeniusMap(const Poly& f);

  const Poly& x_to_p() const noexcept { return x_to_p_; }
  Poly apply(const Poly& h) const;

 private:
  Poly modulus_poly_;
  Poly x_to_p_;
  std::vector<Poly> rows_;
};

// Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a), computed by the Euclidean
// remainder sequence. Res(c, g) = c^deg(g) for a nonzero constant c.
Residue resultant(const Poly& f, const Poly& g);
// (-1)^(d(d-1)/2) * lc(f)^(2d-2) * prod_{i<j} (a_i - a_j)^2, evaluated through
// Res(f, f') with the lc exponent corrected when p divides deg(f).
Residue discriminant(const Poly& f);
bool is_squarefree(const Poly& f);

// Characteristic polynomial of h -> a*h on F_p[x]/(m); monic of degree deg m.
Poly characteristic_polynomial(const Poly& a, const Poly& m);

}  // namespace fpcheb
