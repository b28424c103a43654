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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fpcheb/census.hpp"
#include "fpcheb/class_model.hpp"
#include "fpcheb/errors.hpp"
#include "fpcheb/factor.hpp"
#include "fpcheb/morse.hpp"
#include "helpers.hpp"

namespace fpcheb {
namespace {

using testing::from_vec;
using testing::P;
using testing::random_poly;
using testing::to_vec;

bool contains(const std::vector<Residue>& v, Residue x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

TEST(FamilyShape, ValidatesAndLabels) {
  const Poly f = P(11, {0, 0, 0, 1});
  EXPECT_EQ(FamilyShape::parse("add-const", f).kind(), ShapeKind::additive_constant);
  EXPECT_EQ(FamilyShape::parse("linear", f).kind(), ShapeKind::linear_term);
  EXPECT_EQ(FamilyShape::parse("monomial:2", f).kind(), ShapeKind::monomial);
  EXPECT_EQ(FamilyShape::parse("monomial:1", f).kind(), ShapeKind::linear_term);
  EXPECT_EQ(FamilyShape::parse("general:p:11;1,1", f).direction(), P(11, {1, 1}));
  EXPECT_THROW(FamilyShape::parse("monomial:3", f), PreconditionError);
  EXPECT_THROW(FamilyShape::parse("monomial:x", f), PreconditionError);
  EXPECT_THROW(FamilyShape::parse("general:p:11;0,0,0,1", f), PreconditionError);
  EXPECT_THROW(FamilyShape::parse("general:p:13;1", f), PreconditionError);
  EXPECT_THROW(FamilyShape::parse("quadratic", f), PreconditionError);
  EXPECT_THROW(FamilyShape::additive_constant(P(11, {0, 0, 0, 2})), PreconditionError);
  const auto lin = FamilyShape::linear_term(f);
  EXPECT_EQ(lin.member(4), P(11, {0, 4, 0, 1}));
  EXPECT_EQ(lin.with_fixed(3).base(), P(11, {3, 0, 0, 1}));
  EXPECT_EQ(FamilyShape::additive_constant(f).with_fixed(5).base(), P(11, {0, 5, 0, 1}));
}

TEST(CriticalValues, Examples) {
  const Poly r = critical_value_polynomial(P(7, {0, -3, 0, 1}));
  EXPECT_EQ(r.degree(), 2);
  EXPECT_EQ(r.eval(2), 0u);
  EXPECT_EQ(r.eval(5), 0u);
  EXPECT_TRUE(is_squarefree(r));
  const Poly cube = critical_value_polynomial(P(7, {0, 0, 0, 1}));
  EXPECT_EQ(cube.monic(), P(7, {0, 0, 1}));
  const Poly par = critical_value_polynomial(P(7, {4, 0, 1}));
  EXPECT_EQ(par.degree(), 1);
  EXPECT_EQ(par.eval(4), 0u);
  EXPECT_THROW(critical_value_polynomial(P(5, {0, 0, 0, 0, 1})), PreconditionError);
}

TEST(Morse, Examples) {
  EXPECT_TRUE(is_morse_polynomial(P(7, {0, -3, 0, 1})));
  EXPECT_FALSE(is_morse_polynomial(P(7, {0, 0, 0, 1})));
  EXPECT_TRUE(is_morse_polynomial(P(7, {0, 1, 0, 1})));
  EXPECT_THROW(is_morse_polynomial(P(5, {1, 0, 0, 0, 1})), PreconditionError);
}

TEST(Morse, ExtensionFieldOracleCubicsF7AndQuarticsF7) {
  const oracle::MorseOracle orc(7, 3);
  const PrimeModulus F(7);
  for (int d : {3, 4}) {
    if (7 <= static_cast<u64>(d) + 1) continue;
    oracle::for_each_monic(7, d, [&](const oracle::Vec& v) {
      EXPECT_EQ(is_morse_polynomial(from_vec(F, v)), orc.is_morse(v)) << from_vec(F, v).to_text();
    });
  }
}

TEST(Morse, InvariantUnderTranslations) {
  std::mt19937_64 rng(21);
  for (u64 p : {11ull, 101ull, 10007ull}) {
    const PrimeModulus F(p);
    for (int i = 0; i < 200; ++i) {
      const int d = 3 + static_cast<int>(rng() % 4);
      if (p <= static_cast<u64>(d) + 1) continue;
      const Poly f = random_poly(F, d, rng);
      const bool m = is_morse_polynomial(f);
      EXPECT_EQ(is_morse_polynomial(f.shifted(F.reduce(rng()))), m);
      EXPECT_EQ(is_morse_polynomial(f + Poly::constant(F, F.reduce(rng()))), m);
    }
  }
}

TEST(Geyer, Examples) {
  EXPECT_TRUE(geyer_condition(P(7, {0, 1, 0, 1}), P(7, {0, 0, 1})));
  EXPECT_FALSE(geyer_condition(P(7, {0, 0, 0, 1}), P(7, {0, 0, 1})));
  EXPECT_TRUE(geyer_condition(P(11, {0, 1, 0, 0, 1}), P(11, {0, 0, 0, 1})));
  EXPECT_THROW(geyer_condition(P(7, {0, 1, 0, 1}), P(7, {2})), PreconditionError);
  EXPECT_THROW(geyer_condition(P(7, {0, 1, 0, 1}), P(7, {0, 0, 0, 1})), PreconditionError);
}

TEST(MorseRational, Examples) {
  EXPECT_TRUE(is_morse_rational(P(7, {0, -3, 0, 1}), P(7, {1})));
  // x^3 / x: not coprime, outside the operation's domain.
  EXPECT_THROW(is_morse_rational(P(7, {0, 0, 0, 1}), P(7, {0, 1})), PreconditionError);
  EXPECT_THROW(is_morse_rational(P(7, {1, 1}), P(7, {0, 0, 1})), PreconditionError);
}

TEST(MorseRational, ReducesToPolynomialCase) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const u64 p = i % 2 ? 101 : 13;
    const PrimeModulus F(p);
    const Poly f = random_poly(F, 3 + static_cast<int>(rng() % 4), rng);
    const Poly c = Poly::constant(F, F.reduce(rng() % (p - 1) + 1));
    EXPECT_EQ(is_morse_rational(f, c), is_morse_polynomial(f)) << f.to_text();
  }
}

TEST(MorseRational, OracleOverF49ForDenominatorX) {
  // Every monic cubic f with f(0) != 0 over F_7 against f / x.
  const oracle::MorseOracle orc(7, 3);
  const PrimeModulus F(7);
  const oracle::Vec g{0, 1};
  oracle::for_each_monic(7, 3, [&](const oracle::Vec& v) {
    if (v[0] == 0) return;
    const oracle::Vec w = oracle::add_scaled(oracle::mul(oracle::derivative(v, 7), g, 7),
                                             oracle::mul(v, oracle::derivative(g, 7), 7), 7);
    EXPECT_EQ(is_morse_rational(from_vec(F, v), from_vec(F, g)), orc.distinct_values(v, g, w))
        << from_vec(F, v).to_text();
  });
  EXPECT_EQ(is_morse_rational(P(7, {1, 1, 0, 1}), P(7, {0, 1})),
            orc.distinct_values({1, 1, 0, 1}, g,
                                oracle::add_scaled(oracle::mul({1, 0, 3}, g, 7), {1, 1, 0, 1}, 7)));
}

TEST(MorseRational, OracleForDenominatorXSquared) {
  // f / x^2 with f a monic quartic: W = x (x f' - 2 f); the factor x is a pole.
  const oracle::MorseOracle orc(7, 4);
  const PrimeModulus F(7);
  const oracle::Vec g{0, 0, 1};
  std::mt19937_64 rng(23);
  int tested = 0;
  while (tested < 60) {
    oracle::Vec v{rng() % 7, rng() % 7, rng() % 7, rng() % 7, 1};
    if (v[0] == 0) continue;
    ++tested;
    // x f' - 2 f
    oracle::Vec crit = oracle::add_scaled(oracle::mul({0, 1}, oracle::derivative(v, 7), 7), v, 7, 2);
    EXPECT_EQ(is_morse_rational(from_vec(F, v), from_vec(F, g)), orc.distinct_values(v, g, crit))
        << from_vec(F, v).to_text();
  }
}

TEST(BadSet, LinearTermExamples) {
  EXPECT_TRUE(contains(bad_set(FamilyShape::linear_term(P(7, {0, 0, 0, 1}))).bad, 0));
  EXPECT_FALSE(contains(bad_set(FamilyShape::linear_term(P(7, {0, -3, 0, 1}))).bad, 0));
  const BadSet b = bad_set(FamilyShape::linear_term(P(7, {0, 0, 0, 1})));
  EXPECT_EQ(b.p, 7u);
  EXPECT_EQ(b.d, 3);
  EXPECT_EQ(b.size(), b.bad.size());
  EXPECT_TRUE(std::is_sorted(b.bad.begin(), b.bad.end()));
}

TEST(BadSet, ScanAgreesWithPointwiseTestAndIsSmall) {
  std::mt19937_64 rng(24);
  for (u64 p : {11ull, 101ull, 499ull, 997ull}) {
    const PrimeModulus F(p);
    for (int d = 3; d <= 5; ++d) {
      const Poly base = random_poly(F, d, rng);
      const BadSet b = bad_set(FamilyShape::linear_term(base));
      EXPECT_LE(b.size(), static_cast<std::size_t>(10 * d));
      const Poly x = Poly::monomial(F, 1);
      for (Residue s = 0; s < p; ++s) {
        ASSERT_EQ(is_morse_polynomial(base + x.scaled(s)), !contains(b.bad, s));
      }
    }
  }
}

TEST(BadSet, WorkerCountDoesNotChangeResult) {
  const Poly base = P(1009, {5, 0, 7, 0, 1});
  const auto shape = FamilyShape::linear_term(base);
  BadSetOptions one, many;
  many.workers = 4;
  EXPECT_EQ(bad_set(shape, one).bad, bad_set(shape, many).bad);
}

TEST(BadSet, ConstantTermFamilies) {
  // B_2: f(x) + t x with a_0 scanned; B_3(m): f / x^m with a_1 != 0 fixed.
  const PrimeModulus F(101);
  const Poly base = P(101, {0, 3, 1, 0, 1});
  const BadSet b2 = bad_set(FamilyShape::general(base, P(101, {0, 1})));
  EXPECT_TRUE(contains(b2.bad, 0));  // a_0 = 0 shares the factor x with g
  EXPECT_LE(b2.size(), 40u);
  const BadSet b3 = bad_set(FamilyShape::monomial(base, 2));
  EXPECT_TRUE(contains(b3.bad, 0));
  EXPECT_LE(b3.size(), 40u);
  for (Residue a0 = 1; a0 < 101; ++a0) {
    const Poly f = base.with_coeff(0, a0);
    EXPECT_EQ(contains(b3.bad, a0), !is_morse_rational(f, P(101, {0, 0, 1})));
  }
  EXPECT_THROW(bad_set(FamilyShape::monomial(P(101, {0, 0, 1, 0, 1}), 2)), PreconditionError);
  BadSetOptions tight;
  tight.scan_limit = 50;
  EXPECT_THROW(bad_set(FamilyShape::linear_term(base), tight), PreconditionError);
}

TEST(Decomposition, Examples) {
  EXPECT_EQ(decomposition_witness(P(11, {5, 0, 2, 0, 1}), 2), P(11, {5, 2, 1}));
  EXPECT_FALSE(decomposition_witness(P(11, {1, 1, 0, 0, 1}), 2).has_value());
  EXPECT_EQ(decomposition_witness(P(11, {0, 0, 0, 3, 0, 0, 1}), 3), P(11, {0, 3, 1}));
  EXPECT_THROW(decomposition_witness(P(11, {1, 1}), 1), PreconditionError);
}

TEST(Decomposition, DecomposableFamilyDeviatesFromSymmetricDensities) {
  // x^4 + x^2 + a = g(x^2): Galois group inside a wreath product, so the
  // census is far from S_4 cycle densities (4-cycles need x^2 = root of g
  // to be irreducible over F_{p^2}).
  const PrimeModulus F(1009);
  const Poly base = P(1009, {0, 0, 1, 0, 1});
  ASSERT_TRUE(decomposition_witness(base, 2).has_value());
  EXPECT_FALSE(is_morse_polynomial(base));
  CensusOptions opts;
  opts.main_terms = MainTerms::assume_symmetric;
  const CensusReport rep = interval_census(FamilyShape::additive_constant(base), std::nullopt,
                                           IntervalFp::full(F), opts);
  EXPECT_GT(total_variation_distance(rep), 0.1);
  // A Morse quartic at the same p sits much closer.
  const CensusReport good = interval_census(
      FamilyShape::additive_constant(find_morse_polynomial(F, 4)), std::nullopt, IntervalFp::full(F));
  EXPECT_LT(total_variation_distance(good), 0.05);
}

TEST(FindMorse, SmallestInScanOrder) {
  for (u64 p : {7ull, 11ull, 101ull}) {
    const PrimeModulus F(p);
    for (int d = 3; d <= 5; ++d) {
      if (p <= static_cast<u64>(d) + 1) continue;
      const Poly f = find_morse_polynomial(F, d);
      EXPECT_TRUE(is_morse_polynomial(f));
      EXPECT_EQ(f.degree(), d);
    }
  }
  EXPECT_EQ(find_morse_polynomial(PrimeModulus(7), 3), P(7, {0, 1, 0, 1}));
}

}  // namespace
}  // namespace fpcheb
