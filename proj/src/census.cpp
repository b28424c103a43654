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

#include "fpcheb/census.hpp"

#include <cmath>
#include <map>

#include <fmt/format.h>

#include "fpcheb/errors.hpp"
#include "fpcheb/factor.hpp"
#include "fpcheb/parallel.hpp"

namespace fpcheb {

double error_scale(u64 p) {
  const double pd = static_cast<double>(p);
  return std::sqrt(pd) * std::log(pd);
}

u64 CensusReport::classified() const noexcept {
  u64 total = 0;
  for (const auto& r : rows) total += r.count;
  return total;
}

const ClassRow& CensusReport::row(const std::string& label) const {
  for (const auto& r : rows) {
    if (r.label == label) return r;
  }
  throw PreconditionError("census has no class '" + label + "'");
}

namespace {

void require_interval_matches(const FamilyShape& shape, const IntervalFp& interval) {
  if (!(shape.modulus() == interval.modulus())) {
    throw PreconditionError("interval and family use different moduli");
  }
  if (shape.modulus().value() <= static_cast<u64>(shape.degree()) + 1) {
    throw PreconditionError("census needs p > d + 1");
  }
}

}  // namespace

CensusReport interval_census(const FamilyShape& shape, std::optional<Residue> fixed_param,
                             const IntervalFp& interval, const CensusOptions& options) {
  const FamilyShape family = fixed_param ? shape.with_fixed(*fixed_param) : shape;
  require_interval_matches(family, interval);
  const u64 p = family.modulus().value();
  const int d = family.degree();

  std::string certification = "none";
  if (options.main_terms == MainTerms::certify) {
    if (!certify_symmetric(family)) {
      throw PreconditionError("family " + family.base().to_text() + " [" + family.label() +
                              "] is not certified Morse; S_d main terms refused");
    }
    certification = "morse";
  } else if (options.main_terms == MainTerms::assume_symmetric) {
    certification = "asserted";
  }

  struct Partial {
    std::map<FactorizationType, u64> counts;
    u64 ramified = 0;
  };
  auto partials = parallel_chunks(interval.size(), options.workers, [&](u64 begin, u64 end) {
    Partial part;
    for (u64 i = begin; i < end; ++i) {
      const Poly f = family.member(interval[i]);
      if (discriminant(f) == 0) {
        ++part.ramified;
        continue;
      }
      ++part.counts[squarefree_factorization_type(f)];
    }
    return part;
  });
  Partial merged;
  for (const auto& part : partials) {
    merged.ramified += part.ramified;
    for (const auto& [type, n] : part.counts) merged.counts[type] += n;
  }

  CensusReport report;
  report.p = p;
  report.d = d;
  report.family = family.base().to_text() + " [" + family.label() + "]";
  report.interval = interval.to_text();
  report.interval_size = interval.size();
  report.ramified = merged.ramified;
  report.certification = certification;
  const double scale = error_scale(p);
  for (const auto& lambda : partitions(d)) {
    ClassRow row;
    row.label = lambda.label();
    auto it = merged.counts.find(lambda);
    row.count = it == merged.counts.end() ? 0 : it->second;
    if (report.has_main_terms()) {
      const Density density = cycle_type_density(lambda);
      const double main = static_cast<double>(density.numerator()) /
                          static_cast<double>(density.denominator()) *
                          static_cast<double>(interval.size());
      row.main_term = main;
      row.raw_error = static_cast<double>(row.count) - main;
      row.normalized_error = *row.raw_error / scale;
    }
    report.rows.push_back(std::move(row));
  }
  if (report.classified() + report.ramified != report.interval_size) {
    throw InvariantViolation("census conservation",
                             fmt::format("{} classified + {} ramified != {}",
                                         report.classified(), report.ramified,
                                         report.interval_size));
  }
  return report;
}

std::string IrreducibleCount::line() const {
  return fmt::format("irreducible {}/{} main {:.3f} error {:+.3f} normalized {:+.5f}", count,
                     interval_size, main_term, raw_error, normalized_error);
}

IrreducibleCount irreducible_interval_count(const FamilyShape& shape,
                                            std::optional<Residue> fixed_param,
                                            const IntervalFp& interval, unsigned workers) {
  const FamilyShape family = fixed_param ? shape.with_fixed(*fixed_param) : shape;
  require_interval_matches(family, interval);
  auto partials = parallel_chunks(interval.size(), workers, [&](u64 begin, u64 end) {
    u64 hits = 0;
    for (u64 i = begin; i < end; ++i) {
      if (rabin_irreducible(family.member(interval[i]))) ++hits;
    }
    return hits;
  });
  IrreducibleCount out;
  for (u64 h : partials) out.count += h;
  out.interval_size = interval.size();
  out.main_term = static_cast<double>(interval.size()) / family.degree();
  out.raw_error = static_cast<double>(out.count) - out.main_term;
  out.normalized_error = out.raw_error / error_scale(family.modulus().value());
  return out;
}

double total_variation_distance(const CensusReport& report) {
  const u64 n = report.classified();
  if (n == 0) throw PreconditionError("total variation of an empty census");
  double sum = 0;
  for (const auto& row : report.rows) {
    const Density density = cycle_type_density(FactorizationType::parse(row.label));
    const double expected = static_cast<double>(density.numerator()) /
                            static_cast<double>(density.denominator());
    sum += std::abs(static_cast<double>(row.count) / static_cast<double>(n) - expected);
  }
  return sum / 2;
}

}  // namespace fpcheb
