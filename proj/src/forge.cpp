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

#include "fpcheb/forge.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "fpcheb/errors.hpp"
#include "fpcheb/factor.hpp"
#include "fpcheb/morse.hpp"
#include "fpcheb/parallel.hpp"

namespace fpcheb {

ForgeReport construct_irreducible(const Poly& f, const ForgeSchedule& schedule) {
  const int d = f.degree();
  if (!f.is_monic() || d < 2) {
    throw PreconditionError("construct_irreducible needs a monic f of degree >= 2");
  }
  const PrimeModulus& F = f.modulus();
  const u64 p = F.value();
  if (p <= static_cast<u64>(d) + 1) throw PreconditionError("construct_irreducible needs p > d + 1");
  if (!(schedule.interval_factor > 0)) throw PreconditionError("interval_factor must be positive");
  if (schedule.max_doublings < 0) throw PreconditionError("max_doublings must be >= 0");

  std::vector<Residue> b_order = schedule.b_order;
  if (b_order.empty()) {
    const int prefix = schedule.b_prefix > 0 ? schedule.b_prefix : 4 * d;
    for (int b = 0; b < prefix; ++b) b_order.push_back(F.reduce(static_cast<u64>(b)));
  }
  const double pd = static_cast<double>(p);
  const double logp = std::log(pd);
  u64 length = static_cast<u64>(std::ceil(schedule.interval_factor * std::sqrt(pd) * logp));
  length = std::clamp<u64>(length, 1, p);

  ForgeReport report(F);
  report.p = p;
  report.d = d;
  report.base = f;
  const auto started = std::chrono::steady_clock::now();
  MulCounter counter;
  bool found = false;
  {
    CountingScope scope(counter);
    for (int round = 0; round <= schedule.max_doublings && !found; ++round) {
      if (round > 0) {
        length = std::min<u64>(length * 2, p);
        ++report.doublings;
      }
      report.interval_length = length;
      for (Residue b : b_order) {
        const Poly fb = f.with_coeff(1, F.add(f.coeff(1), F.reduce(b)));
        for (u64 i = 0; i < length; ++i) {
          const Residue a = F.reduce(schedule.interval_start + i);
          const Poly candidate = fb.with_coeff(0, F.add(fb.coeff(0), a));
          ++report.rabin_calls;
          if (rabin_irreducible(candidate)) {
            report.found = candidate;
            report.b_used = F.reduce(b);
            report.a_used = a;
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
  }
  if (!found) {
    throw InvariantViolation(
        "forge exhaustion",
        fmt::format("no irreducible f + b x + a for {} values of b after {} doublings (p={}, f={})",
                    b_order.size(), schedule.max_doublings, p, f.to_text()));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  report.field_mults = counter.count();
  report.budget_ratio = static_cast<double>(report.field_mults) / (std::sqrt(pd) * logp * logp);
  if (!rabin_irreducible(report.found)) {
    throw InvariantViolation("forge re-verification", report.found.to_text() + " is reducible");
  }
  return report;
}

ScalingTable cost_scaling_experiment(std::span<const u64> primes, int d, BaseRule rule,
                                     const ForgeSchedule& schedule, unsigned workers) {
  if (primes.size() < 3) throw PreconditionError("cost scaling needs at least three primes");
  const auto [lo, hi] = std::minmax_element(primes.begin(), primes.end());
  if (*hi < 100 * *lo) throw PreconditionError("cost scaling primes must span two decades");

  std::vector<ForgeReport> reports;
  auto chunks = parallel_chunks(primes.size(), workers, [&](u64 begin, u64 end) {
    std::vector<ForgeReport> out;
    for (u64 i = begin; i < end; ++i) {
      const PrimeModulus F(primes[i]);
      const Poly base = rule == BaseRule::monomial ? Poly::monomial(F, d)
                                                   : find_morse_polynomial(F, d);
      out.push_back(construct_irreducible(base, schedule));
    }
    return out;
  });
  ScalingTable table;
  table.d = d;
  for (auto& chunk : chunks) {
    for (auto& r : chunk) {
      const double pd = static_cast<double>(r.p);
      const double logp = std::log(pd);
      table.rows.push_back({std::move(r), std::sqrt(pd) * logp * logp * logp});
    }
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(table.rows.size());
  for (const auto& row : table.rows) {
    const double x = std::log(static_cast<double>(row.report.p));
    const double y = std::log(static_cast<double>(std::max<u64>(row.report.field_mults, 1)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  table.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  table.intercept = (sy - table.slope * sx) / n;
  return table;
}

}  // namespace fpcheb
