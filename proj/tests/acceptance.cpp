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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fpcheb/arith_sums.hpp"
#include "fpcheb/artin.hpp"
#include "fpcheb/census.hpp"
#include "fpcheb/charsum.hpp"
#include "fpcheb/class_model.hpp"
#include "fpcheb/factor.hpp"
#include "fpcheb/forge.hpp"
#include "fpcheb/interval.hpp"
#include "fpcheb/morse.hpp"
#include "fpcheb/report_io.hpp"
#include "helpers.hpp"

namespace fpcheb {
namespace {

// Tolerances.
constexpr double kSqrtConst = 6.0;          // |error| <= 6 sqrt(p)
constexpr double kTvConst = 10.0;           // TV <= 10 / sqrt(p)
constexpr double kParsevalRel = 1e-3;
constexpr double kReconstructAbs = 1e-3;
constexpr double kIntervalConst = 3.0;      // |count - |I|/3| <= 3 sqrt(p) ln p
constexpr int kBadSetPerDegree = 10;        // |B_1| <= 10 d
constexpr double kSlopeLo = 0.35, kSlopeHi = 0.7;
constexpr double kTrinomialLo = 0.9, kTrinomialHi = 1.1;
constexpr double kTrinomialSmallLo = 0.87, kTrinomialSmallHi = 1.13;

using testing::from_vec;
using testing::to_vec;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double sqrtp(u64 p) { return std::sqrt(static_cast<double>(p)); }

Outcome ac1() {
  Outcome o;
  u64 checked = 0;
  for (auto [p, d] : {std::pair<u64, int>{5, 4}, {7, 3}}) {
    const PrimeModulus m(p);
    oracle::for_each_monic(p, d, [&](const oracle::Vec& v) {
      ++checked;
      const Poly f = from_vec(m, v);
      o.require(rabin_irreducible(f) == oracle::brute_irreducible(v, p),
                "disagreement at " + f.to_text());
    });
  }
  o.require(checked == 625 + 343, "wrong enumeration size");
  if (o.pass) o.detail = fmt::format("{} polynomials agree", checked);
  return o;
}

Outcome ac2() {
  Outcome o;
  u64 checked = 0;
  for (u64 p : {11, 13}) {
    const PrimeModulus m(p);
    const oracle::MorseOracle orc(p, 3);
    for (int d : {3, 4}) {
      // Critical values move together under f -> f + c, so the oracle runs once
      // per (a_d-1, ..., a_1) and covers all p constant terms.
      oracle::for_each_monic(p, d - 1, [&](const oracle::Vec& top) {
        oracle::Vec v(d + 1);
        v[d] = 1;
        for (int i = 1; i < d; ++i) v[i] = top[i - 1];
        const bool expected = orc.is_morse(v);
        for (u64 c = 0; c < p; ++c) {
          v[0] = c;
          ++checked;
          const Poly f = from_vec(m, v);
          o.require(is_morse_polynomial(f) == expected, "disagreement at " + f.to_text());
        }
      });
    }
  }
  if (o.pass) o.detail = fmt::format("{} polynomials agree", checked);
  return o;
}

Outcome ac3() {
  Outcome o;
  for (int d = 1; d <= 6; ++d) {
    const auto types = oracle::symmetric_group_types(d);
    i64 factorial = 1;
    for (int i = 2; i <= d; ++i) factorial *= i;
    Density sum = 0;
    const auto parts = partitions(d);
    o.require(parts.size() == types.size(), fmt::format("partition count, d={}", d));
    for (const auto& lambda : parts) {
      const auto it = types.find(lambda.degrees());
      const i64 brute = it == types.end() ? 0 : static_cast<i64>(it->second);
      o.require(cycle_type_density(lambda, d) == Density(brute, factorial),
                fmt::format("density of {} in S_{}", lambda.label(), d));
      sum += cycle_type_density(lambda, d);
    }
    o.require(sum == Density(1), fmt::format("densities of S_{} sum to {}", d, boost::rational_cast<double>(sum)));
  }
  if (o.pass) o.detail = "exact for d <= 6";
  return o;
}

Outcome ac4() {
  Outcome o;
  const PrimeModulus m(10007);
  const IntervalFp all = IntervalFp::full(m);
  for (int d : {3, 4}) {
    const Poly f = find_morse_polynomial(m, d);
    const auto shape = FamilyShape::additive_constant(f);
    o.require(certify_symmetric(shape), "not certified: " + f.to_text());
    const IrreducibleCount c = irreducible_interval_count(shape, std::nullopt, all);
    const double err = std::abs(static_cast<double>(c.count) - 10007.0 / d);
    o.require(err <= kSqrtConst * sqrtp(10007), fmt::format("d={} count {}", d, c.count));
    const double tv = total_variation_distance(interval_census(shape, std::nullopt, all));
    o.require(tv <= kTvConst / sqrtp(10007), fmt::format("d={} tv {}", d, tv));
    o.detail += fmt::format("d={}: count {} (|err|/sqrt p {:.3f}), tv {:.4f}; ", d, c.count,
                            err / sqrtp(10007), tv);
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  double worst = 0;
  for (u64 p : {499, 997, 2003}) {
    const PrimeModulus m(p);
    const Poly f = find_morse_polynomial(m, 3);
    o.require(is_morse_polynomial(f), "not Morse");
    for (const auto& lambda : partitions(3)) {
      const ClassIndicator ind = class_indicator(f, lambda);
      const auto sums = twisted_class_sums(ind);
      double max_abs = 0;
      for (u64 b = 1; b < p; ++b) max_abs = std::max(max_abs, std::abs(sums[b]));
      worst = std::max(worst, max_abs / sqrtp(p));
      o.require(max_abs <= kSqrtConst * sqrtp(p),
                fmt::format("p={} lambda={} max|S| {}", p, lambda.label(), max_abs));
      const ParsevalCheck pc = parseval_check(ind, sums, kParsevalRel);
      o.require(pc.ok, fmt::format("p={} lambda={} parseval rel {}", p, lambda.label(),
                                   pc.relative_error));
    }
  }
  if (o.pass) o.detail = fmt::format("max |S(b)|/sqrt p = {:.3f}", worst);
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(6);
  {
    const PrimeModulus m(499);
    const Poly f = find_morse_polynomial(m, 3);
    double worst = 0;
    for (const auto& lambda : partitions(3)) {
      const ClassIndicator ind = class_indicator(f, lambda);
      const auto sums = twisted_class_sums(ind);
      for (int trial = 0; trial < 20; ++trial) {
        const IntervalFp iv(m, rng() % 499, 1 + rng() % 498);
        const CompletedSum cs = completed_sum_decomposition(ind, sums, iv);
        worst = std::max(worst, cs.reconstruction_error);
        o.require(cs.reconstruction_error <= kReconstructAbs,
                  fmt::format("p=499 {} reconstruction error {}", iv.to_text(), cs.reconstruction_error));
      }
    }
    o.detail = fmt::format("p=499 worst reconstruction error {:.2e}; ", worst);
  }
  {
    const u64 p = 1000003;
    const PrimeModulus m(p);
    const auto shape = FamilyShape::additive_constant(find_morse_polynomial(m, 3));
    const double bound = kIntervalConst * sqrtp(p) * std::log(static_cast<double>(p));
    double worst = 0;
    for (int trial = 0; trial < 5; ++trial) {
      const IntervalFp iv(m, rng() % p, 200000);
      const IrreducibleCount c = irreducible_interval_count(shape, std::nullopt, iv);
      const double err = std::abs(static_cast<double>(c.count) - 200000.0 / 3);
      worst = std::max(worst, err);
      o.require(err <= bound, fmt::format("p={} {} count {}", p, iv.to_text(), c.count));
    }
    o.detail += fmt::format("p=1000003 worst |count - |I|/3| = {:.0f} (bound {:.0f})", worst, bound);
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t largest = 0;
  int bases = 0;
  for (int d : {3, 4, 5}) {
    for (u64 p : {101, 499, 997}) {
      const PrimeModulus m(p);
      for (int trial = 0; trial < 10; ++trial) {
        const Poly base = testing::random_poly(m, d, rng);
        const BadSet bad = bad_set(FamilyShape::linear_term(base));
        ++bases;
        largest = std::max(largest, bad.size());
        o.require(bad.size() <= static_cast<std::size_t>(kBadSetPerDegree * d),
                  fmt::format("|B_1| = {} for {}", bad.size(), base.to_text()));
        std::vector<bool> in_bad(p, false);
        for (Residue s : bad.bad) in_bad[s] = true;
        for (u64 s = 0; s < p; ++s) {
          const bool morse = is_morse_polynomial(base + Poly::monomial(m, 1, s));
          o.require(morse != in_bad[s], fmt::format("s={} inconsistent for {}", s, base.to_text()));
        }
      }
    }
  }
  if (o.pass) o.detail = fmt::format("{} bases, largest |B_1| = {}", bases, largest);
  return o;
}

Outcome ac8() {
  Outcome o;
  const std::vector<u64> primes{1009, 10007, 100003, 1000003};
  for (int d : {3, 5, 8}) {
    const ScalingTable t = cost_scaling_experiment(primes, d, BaseRule::monomial);
    for (const auto& row : t.rows) {
      const ForgeReport& r = row.report;
      const PrimeModulus m(r.p);
      o.require(r.doublings == 0, fmt::format("p={} d={} doubled {} times", r.p, d, r.doublings));
      const Poly expected = Poly::monomial(m, d) + Poly::monomial(m, 1, r.b_used) + Poly::constant(m, r.a_used);
      o.require(r.found == expected, fmt::format("p={} d={} found {}", r.p, d, r.found.to_text()));
      o.require(rabin_irreducible(r.found) && factorization_type(r.found) == FactorizationType({d}),
                fmt::format("p={} d={} result not irreducible", r.p, d));
    }
    if (d == 5) {
      o.require(t.slope >= kSlopeLo && t.slope <= kSlopeHi, fmt::format("d=5 slope {}", t.slope));
      const std::string first = scaling_json(t, false).dump();
      const std::string second =
          scaling_json(cost_scaling_experiment(primes, d, BaseRule::monomial), false).dump();
      o.require(first == second, "d=5 reports differ between runs");
    }
    o.detail += fmt::format("d={} slope {:.3f}; ", d, t.slope);
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  const PrimeModulus big(100003);
  const TrinomialSweep a =
      trinomial_sweep(big, 5, IntervalFp(big, 0, 5000), IntervalFp(big, 0, 100));
  o.require(a.density_ratio >= kTrinomialLo && a.density_ratio <= kTrinomialHi,
            fmt::format("p=100003 ratio {}", a.density_ratio));
  const PrimeModulus small(499);
  const TrinomialSweep b =
      trinomial_sweep(small, 3, IntervalFp::full(small), IntervalFp::full(small));
  o.require(b.density_ratio >= kTrinomialSmallLo && b.density_ratio <= kTrinomialSmallHi,
            fmt::format("p=499 ratio {}", b.density_ratio));
  o.detail += fmt::format("p=100003 ratio {:.4f}, p=499 ratio {:.4f}", a.density_ratio, b.density_ratio);
  return o;
}

Outcome ac10() {
  Outcome o;
  const u64 p = 9007;
  const PrimeModulus m(p);
  const Residue omega = primitive_cube_root(m);
  const IntervalFp all = IntervalFp::full(m);
  const std::vector<Residue> two{0, 1}, one{0};
  const JointCubicCensus joint = joint_cubic_census(m, two, all, omega);
  o.require(joint.counts.size() == 9, fmt::format("{} joint cells", joint.counts.size()));
  double worst = 0;
  for (const auto& [cell, count] : joint.counts) {
    const double err = std::abs(static_cast<double>(count) - p / 9.0);
    worst = std::max(worst, err / sqrtp(p));
    o.require(err <= kSqrtConst * sqrtp(p), fmt::format("cell count {}", count));
  }
  const JointCubicCensus single = joint_cubic_census(m, one, all, omega);
  o.require(single.skipped == 1, "k=1 skipped count");
  o.require(single.counts.size() == 3, "k=1 cells");
  for (const auto& [cell, count] : single.counts)
    o.require(count == (p - 1) / 3, fmt::format("k=1 cell count {}", count));
  if (o.pass) o.detail = fmt::format("k=2 max |err|/sqrt p = {:.3f}; k=1 exact", worst);
  return o;
}

Outcome ac11() {
  Outcome o;
  for (u64 p : {3, 5, 7, 11, 13}) {
    const PrimeModulus m(p);
    for (u64 a = 0; a < p; ++a) {
      const Poly f = Poly::monomial(m, static_cast<int>(p)) - Poly::monomial(m, 1) - Poly::constant(m, a);
      if (a != 0) {
        o.require(rabin_irreducible(f), fmt::format("p={} a={} reducible", p, a));
      } else {
        o.require(factorization_type(f) == FactorizationType(std::vector<int>(p, 1)),
                  fmt::format("p={} a=0 does not split", p));
      }
    }
  }
  if (o.pass) o.detail = "p in {3,5,7,11,13}";
  return o;
}

Outcome ac12() {
  Outcome o;
  const u64 p = 10007;
  const PrimeModulus m(p);
  const Poly f = find_morse_polynomial(m, 3);
  const IntervalFp all = IntervalFp::full(m);
  const std::vector<std::vector<Residue>> shift_sets{{0}, {0, 1}};
  for (const auto& shifts : shift_sets) {
    const i64 s = chowla_sum(f, shifts, all);
    o.require(std::abs(static_cast<double>(s)) <= kSqrtConst * sqrtp(p),
              fmt::format("k={} sum {}", shifts.size(), s));
    o.detail += fmt::format("k={}: S = {} ({:.3f} sqrt p); ", shifts.size(), s,
                            static_cast<double>(s) / sqrtp(p));
  }
  return o;
}

Outcome ac13() {
  Outcome o;
  const PrimeModulus m(10007);
  const auto shape = FamilyShape::additive_constant(find_morse_polynomial(m, 3));
  const IntervalFp all = IntervalFp::full(m);
  CensusOptions one, eight;
  eight.workers = 8;
  const CensusReport a = interval_census(shape, std::nullopt, all, one);
  const CensusReport b = interval_census(shape, std::nullopt, all, eight);
  o.require(a.classified() + a.ramified == 10007, "counts do not cover the field");
  o.require(census_json(a).dump() == census_json(b).dump(), "json differs");
  o.require(census_csv(a) == census_csv(b), "csv differs");
  if (o.pass) o.detail = "1 and 8 workers identical";
  return o;
}

}  // namespace
}  // namespace fpcheb

int main() {
  using namespace fpcheb;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rabin vs brute force", ac1},
      {"Morse vs critical-point enumeration", ac2},
      {"cycle densities of S_d", ac3},
      {"full-field Chebotarev", ac4},
      {"twisted class sums and Parseval", ac5},
      {"completed sums on intervals", ac6},
      {"bad sets", ac7},
      {"forge", ac8},
      {"trinomial density", ac9},
      {"cubic residue classes", ac10},
      {"Artin-Schreier", ac11},
      {"Chowla sums", ac12},
      {"census worker determinism", ac13},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    fmt::print("AC{:<2} {} {} ({:.1f} s): {}\n", index, o.pass ? "PASS" : "FAIL", name, secs,
               o.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
