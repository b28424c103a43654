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

#include <complex>
#include <string>

#include "nlohmann/json.hpp"

#include "fpcheb/census.hpp"
#include "fpcheb/factor.hpp"
#include "fpcheb/forge.hpp"
#include "fpcheb/morse.hpp"

namespace fpcheb {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"schema": 1, "kind": kind}; every JSON artifact starts from this.
Json artifact(const std::string& kind);

Json complex_json(std::complex<double> z);

Json census_json(const CensusReport& report);
// class,count,main_term,raw_error,normalized_error; empty cells when the
// report carries no main terms.
std::string census_csv(const CensusReport& report);

Json factorization_json(const Factorization& factorization);
Json type_json(const FactorizationType& type);

Json bad_set_json(const BadSet& set);

Json forge_json(const ForgeReport& report, bool with_timing);
Json scaling_json(const ScalingTable& table, bool with_timing);
std::string scaling_csv(const ScalingTable& table);

// Shortest round-trip decimal form; used for every floating CSV cell.
std::string format_double(double value);

}  // namespace fpcheb
