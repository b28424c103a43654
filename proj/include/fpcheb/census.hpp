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
#include <vector>

#include "fpcheb/class_model.hpp"
#include "fpcheb/interval.hpp"
#include "fpcheb/morse.hpp"

namespace fpcheb {

// sqrt(p) * ln p; errors are reported divided by this (natural log).
double error_scale(u64 p);

enum class MainTerms {
  none,              // counts only
  certify,           // run the Morse certification, refuse if it fails
  assume_symmetric,  // caller vouches for Galois group S_d by other means
};

struct ClassRow {
  std::string label;
  u64 count = 0;
  std::optional<double> main_term;
  std::optional<double> raw_error;
  std::optional<double> normalized_error;
};

struct CensusReport {
  u64 p = 0;
  int d = 0;
  std::string family;
  std::string interval;
  u64 interval_size = 0;
  // Specializations with vanishing discriminant; excluded from every class.
  u64 ramified = 0;
  std::string certification;  // "morse", "asserted" or "none"
  std::vector<ClassRow> rows;

  bool has_main_terms() const noexcept { return certification != "none"; }
  u64 classified() const noexcept;
  const ClassRow& row(const std::string& label) const;
};

struct CensusOptions {
  MainTerms main_terms = MainTerms::certify;
  unsigned workers = 1;
};

// Tallies factorization types of f_a = shape.member(a) for a in I, skipping
// and counting ramified a. fixed_param, when given, first fixes the shape's
// exceptional-set coefficient (see FamilyShape::with_fixed). The interval is
// split into `workers` chunks whose counts are merged by addition, so the
// report does not depend on the worker count.
CensusReport interval_census(const FamilyShape& shape, std::optional<Residue> fixed_param,
                             const IntervalFp& interval, const CensusOptions& options = {});

struct IrreducibleCount {
  u64 count = 0;
  u64 interval_size = 0;
  double main_term = 0;
  double raw_error = 0;
  double normalized_error = 0;

  std::string line() const;
};

// The (d) row of interval_census, computed with Rabin's test alone.
IrreducibleCount irreducible_interval_count(const FamilyShape& shape,
                                            std::optional<Residue> fixed_param,
                                            const IntervalFp& interval, unsigned workers = 1);

// Half the l1 distance between the type histogram of the unramified
// specializations and the S_d cycle-type densities.
double total_variation_distance(const CensusReport& report);

}  // namespace fpcheb
