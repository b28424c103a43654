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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fpcheb/modulus.hpp"
#include "fpcheb/report_io.hpp"

namespace fpcheb {

struct RunConfig {
  std::string command;
  u64 p = 0;
  int d = 3;
  // Poly text. Empty: x^d for forge, otherwise the first Morse x^d + c1 x + c0.
  std::string base;
  std::string shape = "add-const";
  // M:len[:A:B]; empty means all of F_p.
  std::string interval;
  std::string interval1;  // trinomials: range of a_1
  std::optional<u64> fixed;
  std::vector<u64> shifts{0};
  int r = 2;
  std::string mode = "shifted";
  std::optional<u64> omega;
  std::string lambda;  // empty: the d-cycle class
  std::optional<u64> b;
  bool all_b = false;
  std::string g;  // morse: optional denominator
  std::string main_terms = "certify";
  std::vector<u64> primes{1009, 10007, 100003, 1000003};
  std::string base_rule = "monomial";
  double interval_factor = 2.0;
  int b_prefix = 0;
  u64 interval_start = 0;
  int max_doublings = 4;
  u64 seed = 0;
  std::string format;  // empty: the command's default
  std::string out;
  unsigned workers = 1;
  bool dry_run = false;
  bool no_timestamp = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInvariant = 3;

Json config_json(const RunConfig& config);

// Runs one command. The artifact goes to config.out (or `out`), diagnostics to `err`.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fpcheb
