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

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "fpcheb/factor.hpp"

namespace fpcheb {

using Density = boost::rational<i64>;

// All partitions of d as factorization types, ordered by their part lists.
std::vector<FactorizationType> partitions(int d);

// Share of S_d with cycle type lambda: 1 / prod_i (i^m_i * m_i!), where m_i
// counts the parts equal to i. Exact for d <= 20.
Density cycle_type_density(const FactorizationType& lambda);
// Same, after checking that lambda is a partition of d.
Density cycle_type_density(const FactorizationType& lambda, int d);

enum class ClassFamily { symmetric_cycle_types, cubic_power, artin_schreier };

struct ClassDensity {
  std::string label;
  Density density;
};

// Target distribution over Artin classes for the geometric (n = 1) families
// handled here. Densities always sum to exactly 1.
class ClassModel {
 public:
  static ClassModel symmetric(int d);
  // A_3^k, classes labelled "j1,...,jk" with j in {0,1,2}.
  static ClassModel cubic_power(int k);
  // F_p^+, classes labelled by the residue.
  static ClassModel artin_schreier(u64 p);

  ClassFamily family() const noexcept { return family_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<ClassDensity>& classes() const noexcept { return classes_; }
  Density total() const;
  Density density(const std::string& class_label) const;

 private:
  ClassModel(ClassFamily family, std::string label, std::vector<ClassDensity> classes)
      : family_(family), label_(std::move(label)), classes_(std::move(classes)) {}

  ClassFamily family_;
  std::string label_;
  std::vector<ClassDensity> classes_;
};

}  // namespace fpcheb
