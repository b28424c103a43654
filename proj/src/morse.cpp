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

#include "fpcheb/morse.hpp"

#include <algorithm>
#include <charconv>

#include "fpcheb/errors.hpp"
#include "fpcheb/parallel.hpp"

namespace fpcheb {

namespace {

void require_char_above(const Poly& f, const char* op) {
  const u64 d = static_cast<u64>(std::max(f.degree(), 0));
  if (f.p() <= d + 1) {
    throw PreconditionError(std::string(op) + " needs p > d + 1 (p=" +
                            std::to_string(f.p()) + ", d=" + std::to_string(d) + ")");
  }
}

void require_monic_base(const Poly& f, const char* op) {
  if (!f.is_monic() || f.degree() < 2) {
    throw PreconditionError(std::string(op) +
                            " needs a monic polynomial of degree >= 2, got " +
                            f.to_text());
  }
}

}  // namespace

FamilyShape::FamilyShape(ShapeKind kind, Poly base, Poly direction)
    : kind_(kind), base_(std::move(base)), direction_(std::move(direction)) {
  require_monic_base(base_, "family shape");
  if (!(base_.modulus() == direction_.modulus())) {
    throw PreconditionError("family shape: modulus mismatch");
  }
  if (direction_.is_zero() || direction_.degree() >= base_.degree()) {
    throw PreconditionError("family shape: direction must be nonzero of degree < d");
  }
}

FamilyShape FamilyShape::additive_constant(Poly base) {
  const PrimeModulus m = base.modulus();
  return FamilyShape(ShapeKind::additive_constant, std::move(base), Poly::constant(m, 1));
}

FamilyShape FamilyShape::linear_term(Poly base) {
  const PrimeModulus m = base.modulus();
  return FamilyShape(ShapeKind::linear_term, std::move(base), Poly::monomial(m, 1));
}

FamilyShape FamilyShape::monomial(Poly base, int m) {
  if (m < 1 || m >= base.degree()) {
    throw PreconditionError("monomial family needs 1 <= m <= d-1, got m=" +
                            std::to_string(m));
  }
  if (m == 1) return linear_term(std::move(base));
  const PrimeModulus mod = base.modulus();
  return FamilyShape(ShapeKind::monomial, std::move(base), Poly::monomial(mod, m));
}

FamilyShape FamilyShape::general(Poly base, Poly g) {
  return FamilyShape(ShapeKind::general, std::move(base), std::move(g));
}

FamilyShape FamilyShape::parse(std::string_view spec, Poly base) {
  if (spec == "add-const") return additive_constant(std::move(base));
  if (spec == "linear") return linear_term(std::move(base));
  if (spec.substr(0, 9) == "monomial:") {
    const std::string_view tok = spec.substr(9);
    int m = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), m);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw PreconditionError("bad monomial exponent in shape '" + std::string(spec) + "'");
    }
    return monomial(std::move(base), m);
  }
  if (spec.substr(0, 8) == "general:") {
    return general(std::move(base), Poly::parse(spec.substr(8)));
  }
  throw PreconditionError("unknown family shape '" + std::string(spec) + "'");
}

Poly FamilyShape::member(Residue a) const {
  return base_ + direction_.scaled(modulus().reduce(a));
}

FamilyShape FamilyShape::with_fixed(Residue value) const {
  const int slot = kind_ == ShapeKind::additive_constant ? 1 : 0;
  return FamilyShape(kind_, base_.with_coeff(slot, value), direction_);
}

std::string FamilyShape::label() const {
  switch (kind_) {
    case ShapeKind::additive_constant:
      return "add-const";
    case ShapeKind::linear_term:
      return "linear";
    case ShapeKind::monomial:
      return "monomial:" + std::to_string(direction_.degree());
    case ShapeKind::general:
      return "general:" + direction_.to_text();
  }
  return "unknown";
}

Poly critical_value_polynomial(const Poly& f) {
  require_monic_base(f, "critical_value_polynomial");
  require_char_above(f, "critical_value_polynomial");
  const Poly df = f.derivative();
  const int d = f.degree();
  if (df.degree() != d - 1) {
    throw PreconditionError("critical_value_polynomial: deg f' < d - 1");
  }
  const Poly charpoly = characteristic_polynomial(f, df);
  return charpoly.scaled(f.modulus().pow(df.leading(), static_cast<u64>(d)));
}

bool is_morse_polynomial(const Poly& f) {
  const Poly r = critical_value_polynomial(f);
  return r.degree() == f.degree() - 1 && is_squarefree(r);
}

bool geyer_condition(const Poly& f_circ, const Poly& g) {
  require_monic_base(f_circ, "geyer_condition");
  if (!(f_circ.modulus() == g.modulus())) {
    throw PreconditionError("geyer_condition: modulus mismatch");
  }
  if (g.degree() < 1) {
    throw PreconditionError(
        "geyer_condition: deg g = 0 makes the condition vacuous; use the "
        "additive-constant family");
  }
  if (g.degree() >= f_circ.degree()) {
    throw PreconditionError("geyer_condition needs deg g < deg f");
  }
  const Poly d1 = f_circ.derivative();
  if (d1.derivative().is_zero()) return false;
  return gcd(d1, g.derivative()).degree() == 0;
}

bool is_morse_rational(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) {
    throw PreconditionError("is_morse_rational: zero numerator or denominator");
  }
  if (!(f.modulus() == g.modulus())) {
    throw PreconditionError("is_morse_rational: modulus mismatch");
  }
  if (f.degree() <= g.degree()) {
    throw PreconditionError("is_morse_rational needs deg f > deg g");
  }
  require_char_above(f, "is_morse_rational");
  if (gcd(f, g).degree() != 0) {
    throw PreconditionError("is_morse_rational needs gcd(f, g) = 1");
  }
  const Poly w = f.derivative() * g - f * g.derivative();
  if (w.degree() != f.degree() + g.degree() - 1) {
    throw InvariantViolation("critical divisor degree",
                             "W = f'g - fg' lost its expected leading term");
  }
  // A root of W shared with g is a multiple root of g, i.e. a ramified pole.
  Poly affine = w;
  while (true) {
    const Poly t = gcd(affine, g);
    if (t.degree() == 0) break;
    affine = exact_quotient(affine, t);
  }
  if (affine.degree() < 1) return true;
  if (!is_squarefree(affine)) return false;
  const Poly values = mulmod(f, invert_mod(g, affine), affine);
  return is_squarefree(characteristic_polynomial(values, affine));
}

bool certify_symmetric(const FamilyShape& shape) {
  const Poly& base = shape.base();
  if (shape.kind() == ShapeKind::additive_constant) return is_morse_polynomial(base);
  if (gcd(base, shape.direction()).degree() != 0) return false;
  return is_morse_rational(base, shape.direction());
}

BadSet bad_set(const FamilyShape& shape, const BadSetOptions& options) {
  const Poly& base = shape.base();
  require_char_above(base, "bad_set");
  const u64 p = base.p();
  if (p > options.scan_limit) {
    throw PreconditionError("bad_set: p=" + std::to_string(p) +
                            " exceeds the scan limit " + std::to_string(options.scan_limit));
  }
  if (shape.kind() == ShapeKind::monomial && base.coeff(1) == 0) {
    throw PreconditionError("bad_set for a monomial family needs a nonzero linear coefficient");
  }
  const PrimeModulus& F = base.modulus();
  const Poly x = Poly::monomial(F, 1);
  auto is_bad = [&](Residue s) {
    switch (shape.kind()) {
      case ShapeKind::additive_constant:
      case ShapeKind::linear_term:
        return !is_morse_polynomial(base + x.scaled(s));
      case ShapeKind::monomial:
      case ShapeKind::general: {
        const Poly f = base.with_coeff(0, s);
        if (gcd(f, shape.direction()).degree() != 0) return true;
        return !is_morse_rational(f, shape.direction());
      }
    }
    return true;
  };
  auto chunks = parallel_chunks(p, options.workers, [&](u64 begin, u64 end) {
    std::vector<Residue> bad;
    for (u64 s = begin; s < end; ++s) {
      if (is_bad(s)) bad.push_back(s);
    }
    return bad;
  });
  BadSet out{p, base.degree(), shape.label(), {}};
  for (auto& c : chunks) out.bad.insert(out.bad.end(), c.begin(), c.end());
  return out;
}

std::optional<Poly> decomposition_witness(const Poly& f, int m) {
  if (m < 2) throw PreconditionError("decomposition_witness needs m >= 2");
  const auto c = f.coeffs();
  std::vector<Residue> g;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % static_cast<std::size_t>(m) == 0) {
      g.push_back(c[i]);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return Poly(f.modulus(), std::move(g));
}

Poly find_morse_polynomial(const PrimeModulus& modulus, int d) {
  if (d < 2) throw PreconditionError("find_morse_polynomial needs d >= 2");
  const u64 p = modulus.value();
  if (p <= static_cast<u64>(d) + 1) {
    throw PreconditionError("find_morse_polynomial needs p > d + 1");
  }
  const Poly lead = Poly::monomial(modulus, d);
  for (u64 c1 = 1; c1 < p; ++c1) {
    for (u64 c0 = 0; c0 < p; ++c0) {
      Poly f = lead.with_coeff(1, c1).with_coeff(0, c0);
      if (is_morse_polynomial(f)) return f;
    }
  }
  throw InvariantViolation("morse search", "no Morse polynomial of the form x^d + c1 x + c0");
}

}  // namespace fpcheb
