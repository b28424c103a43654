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

#include "fpcheb/class_model.hpp"

#include <map>

#include "fpcheb/errors.hpp"

namespace fpcheb {

namespace {

void partitions_rec(int remaining, int min_part, std::vector<int>& current,
                    std::vector<FactorizationType>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<FactorizationType> partitions(int d) {
  if (d < 1) throw PreconditionError("partitions need d >= 1");
  std::vector<FactorizationType> out;
  std::vector<int> current;
  partitions_rec(d, 1, current, out);
  return out;
}

Density cycle_type_density(const FactorizationType& lambda) {
  if (lambda.parts() == 0) throw PreconditionError("empty partition");
  if (lambda.total() > 20) throw PreconditionError("cycle_type_density supports d <= 20");
  std::map<int, int> multiplicity;
  for (int part : lambda.degrees()) ++multiplicity[part];
  i64 centralizer = 1;
  for (const auto& [part, m] : multiplicity) {
    for (int j = 1; j <= m; ++j) centralizer *= static_cast<i64>(part) * j;
  }
  return Density(1, centralizer);
}

Density cycle_type_density(const FactorizationType& lambda, int d) {
  if (lambda.total() != d) {
    throw PreconditionError("'" + lambda.label() + "' is not a partition of " +
                            std::to_string(d));
  }
  return cycle_type_density(lambda);
}

ClassModel ClassModel::symmetric(int d) {
  std::vector<ClassDensity> classes;
  for (const auto& lambda : partitions(d)) {
    classes.push_back({lambda.label(), cycle_type_density(lambda)});
  }
  return ClassModel(ClassFamily::symmetric_cycle_types, "S_" + std::to_string(d),
                    std::move(classes));
}

ClassModel ClassModel::cubic_power(int k) {
  if (k < 1 || k > 12) throw PreconditionError("cubic_power needs 1 <= k <= 12");
  i64 cells = 1;
  for (int i = 0; i < k; ++i) cells *= 3;
  std::vector<ClassDensity> classes;
  for (i64 idx = 0; idx < cells; ++idx) {
    std::string label;
    i64 rest = idx;
    std::vector<int> digits(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    for (int i = 0; i < k; ++i) {
      if (i != 0) label += ',';
      label += std::to_string(digits[static_cast<std::size_t>(i)]);
    }
    classes.push_back({label, Density(1, cells)});
  }
  return ClassModel(ClassFamily::cubic_power, "A_3^" + std::to_string(k), std::move(classes));
}

ClassModel ClassModel::artin_schreier(u64 p) {
  std::vector<ClassDensity> classes;
  classes.reserve(p);
  for (u64 a = 0; a < p; ++a) {
    classes.push_back({std::to_string(a), Density(1, static_cast<i64>(p))});
  }
  return ClassModel(ClassFamily::artin_schreier, "F_" + std::to_string(p) + "^+",
                    std::move(classes));
}

Density ClassModel::total() const {
  Density sum(0);
  for (const auto& c : classes_) sum += c.density;
  return sum;
}

Density ClassModel::density(const std::string& class_label) const {
  for (const auto& c : classes_) {
    if (c.label == class_label) return c.density;
  }
  throw PreconditionError("class '" + class_label + "' not in model " + label_);
}

}  // namespace fpcheb
