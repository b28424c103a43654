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

#include <cmath>

#include "fpcheb/errors.hpp"
#include "fpcheb/factor.hpp"
#include "fpcheb/forge.hpp"
#include "fpcheb/morse.hpp"
#include "fpcheb/report_io.hpp"
#include "helpers.hpp"

namespace fpcheb {
namespace {

using testing::P;
using testing::random_poly;
using testing::to_vec;

struct Hit {
  Residue b, a;
  u64 index;  // 0-based position in the scan
};

// Re-scan in the documented order with trial-division irreducibility.
std::optional<Hit> brute_first_hit(const Poly& f, u64 length, int prefix) {
  const PrimeModulus& F = f.modulus();
  u64 index = 0;
  for (int b = 0; b < prefix; ++b) {
    for (u64 i = 0; i < length; ++i, ++index) {
      const Residue a = F.reduce(i);
      const Poly g = f + Poly::monomial(F, 1, F.reduce(b)) + Poly::constant(F, a);
      if (oracle::brute_irreducible(to_vec(g), F.value())) return Hit{F.reduce(b), a, index};
    }
  }
  return std::nullopt;
}

u64 default_length(u64 p) {
  const double v = std::ceil(2.0 * std::sqrt(double(p)) * std::log(double(p)));
  return std::min<u64>(p, static_cast<u64>(v));
}

TEST(Forge, ImmediateHitOnIrreducibleBase) {
  const Poly f = P(7, {2, 0, 0, 1});
  ASSERT_TRUE(rabin_irreducible(f));
  const ForgeReport r = construct_irreducible(f);
  EXPECT_EQ(r.b_used, 0u);
  EXPECT_EQ(r.a_used, 0u);
  EXPECT_EQ(r.rabin_calls, 1u);
  EXPECT_EQ(r.found, f);
  EXPECT_EQ(r.doublings, 0);
}

TEST(Forge, FirstHitAtP31MatchesBruteScan) {
  const Poly f = P(31, {0, 0, 0, 1});
  const ForgeReport r = construct_irreducible(f);
  const auto hit = brute_first_hit(f, default_length(31), 12);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(r.b_used, hit->b);
  EXPECT_EQ(r.a_used, hit->a);
  EXPECT_EQ(r.rabin_calls, hit->index + 1);
  EXPECT_EQ(r.interval_length, 31u);
}

TEST(Forge, MinimalInScanOrderAndSparse) {
  std::mt19937_64 rng(41);
  for (u64 p : {11ull, 101ull, 211ull, 997ull}) {
    const PrimeModulus F(p);
    for (int d = 3; d <= 5; ++d) {
      const Poly f = d == 3 ? Poly::monomial(F, 3) : random_poly(F, d, rng);
      const ForgeReport r = construct_irreducible(f);
      const auto hit = brute_first_hit(f, default_length(p), 4 * d);
      ASSERT_TRUE(hit.has_value());
      EXPECT_EQ(r.b_used, hit->b) << f.to_text();
      EXPECT_EQ(r.a_used, hit->a) << f.to_text();
      EXPECT_EQ(r.rabin_calls, hit->index + 1);
      EXPECT_TRUE(oracle::brute_irreducible(to_vec(r.found), p));
      for (int i = 2; i <= d; ++i) EXPECT_EQ(r.found.coeff(i), f.coeff(i));
      EXPECT_EQ(r.found.coeff(1), F.add(f.coeff(1), r.b_used));
      EXPECT_EQ(r.found.coeff(0), F.add(f.coeff(0), r.a_used));
    }
  }
}

TEST(Forge, DoublesWhenThePrefixFails) {
  // x^3 + a over F_7 is irreducible first at a = 2 (cubes are 0, 1, 6).
  ForgeSchedule s;
  s.b_order = {0};
  s.interval_factor = 1e-6;  // |I| = 1
  const ForgeReport r = construct_irreducible(P(7, {0, 0, 0, 1}), s);
  EXPECT_EQ(r.doublings, 2);
  EXPECT_EQ(r.interval_length, 4u);
  EXPECT_EQ(r.a_used, 2u);
}

TEST(Forge, ExhaustionIsReported) {
  // gcd(5, p - 1) = 1 makes x^5 + a reducible for every a.
  ForgeSchedule s;
  s.b_order = {0};
  s.max_doublings = 1;
  EXPECT_THROW(construct_irreducible(P(107, {0, 0, 0, 0, 0, 1}), s), InvariantViolation);
}

TEST(Forge, Preconditions) {
  EXPECT_THROW(construct_irreducible(P(101, {1, 1, 2})), PreconditionError);
  EXPECT_THROW(construct_irreducible(P(101, {1, 1})), PreconditionError);
  EXPECT_THROW(construct_irreducible(P(5, {0, 0, 0, 0, 1})), PreconditionError);
  ForgeSchedule bad;
  bad.interval_factor = 0;
  EXPECT_THROW(construct_irreducible(P(101, {0, 0, 0, 1}), bad), PreconditionError);
  bad.interval_factor = 2;
  bad.max_doublings = -1;
  EXPECT_THROW(construct_irreducible(P(101, {0, 0, 0, 1}), bad), PreconditionError);
}

TEST(Forge, DeterministicReportsAndBudget) {
  const Poly f = Poly::monomial(PrimeModulus(10007), 5);
  const ForgeReport a = construct_irreducible(f), b = construct_irreducible(f);
  EXPECT_EQ(forge_json(a, false).dump(), forge_json(b, false).dump());
  EXPECT_GT(a.field_mults, 0u);
  const double logp = std::log(10007.0);
  EXPECT_NEAR(a.budget_ratio, double(a.field_mults) / (std::sqrt(10007.0) * logp * logp), 1e-9);
  EXPECT_TRUE(rabin_irreducible(a.found));
}

TEST(Scaling, Preconditions) {
  const std::vector<u64> one{10007};
  EXPECT_THROW(cost_scaling_experiment(one, 5, BaseRule::monomial), PreconditionError);
  const std::vector<u64> narrow{1009, 2003, 5003};
  EXPECT_THROW(cost_scaling_experiment(narrow, 5, BaseRule::monomial), PreconditionError);
}

TEST(Scaling, SlopeForQuinticMonomial) {
  const std::vector<u64> primes{1009, 10007, 100003, 1000003};
  const ScalingTable t = cost_scaling_experiment(primes, 5, BaseRule::monomial, {}, 2);
  ASSERT_EQ(t.rows.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(t.rows[i].report.p, primes[i]);
    EXPECT_EQ(t.rows[i].report.doublings, 0);
    const double logp = std::log(double(primes[i]));
    EXPECT_NEAR(t.rows[i].shoup_model, std::sqrt(double(primes[i])) * logp * logp * logp, 1e-6);
  }
  EXPECT_GE(t.slope, 0.35);
  EXPECT_LE(t.slope, 0.7);
  const std::string csv = scaling_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,d,b,a,rabin_calls,field_mults,budget_ratio,shoup_model");
}

TEST(Scaling, AdjacentDoublingRatios) {
  // p roughly doubling, p != 1 mod 5 so that b = 0 never hits.
  const std::vector<u64> primes{10009, 20023, 40037, 80077, 160117, 320237, 1280023};
  const ScalingTable t = cost_scaling_experiment(primes, 5, BaseRule::monomial);
  for (std::size_t i = 1; i + 1 < t.rows.size(); ++i) {
    const double ratio = double(t.rows[i].report.field_mults) / double(t.rows[i - 1].report.field_mults);
    EXPECT_GE(ratio, 1.0) << primes[i];
    EXPECT_LE(ratio, 4.0) << primes[i];
  }
}

}  // namespace
}  // namespace fpcheb
