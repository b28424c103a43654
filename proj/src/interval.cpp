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

#include "fpcheb/interval.hpp"

#include <charconv>

#include "fpcheb/errors.hpp"

namespace fpcheb {

IntervalFp::IntervalFp(const PrimeModulus& modulus, Residue start, u64 length,
                       std::optional<Progression> progression)
    : modulus_(modulus),
      start_(modulus.reduce(start)),
      length_(length),
      progression_(progression) {
  if (length_ < 1 || length_ > modulus_.value()) {
    throw PreconditionError("interval length must lie in [1, p], got " +
                            std::to_string(length_));
  }
  if (progression_) {
    progression_->step = modulus_.reduce(progression_->step);
    progression_->offset = modulus_.reduce(progression_->offset);
    if (progression_->step == 0) {
      throw PreconditionError("progression step must be nonzero");
    }
  }
}

IntervalFp IntervalFp::full(const PrimeModulus& modulus) {
  return IntervalFp(modulus, 0, modulus.value());
}

IntervalFp IntervalFp::parse(const PrimeModulus& modulus, std::string_view text) {
  std::vector<u64> fields;
  std::string_view rest = text;
  while (true) {
    const auto colon = rest.find(':');
    const std::string_view tok = rest.substr(0, colon);
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw PreconditionError("bad interval '" + std::string(text) +
                              "', expected M:length[:A:B]");
    }
    fields.push_back(v);
    if (colon == std::string_view::npos) break;
    rest = rest.substr(colon + 1);
  }
  if (fields.size() == 2) return IntervalFp(modulus, fields[0], fields[1]);
  if (fields.size() == 4) {
    return IntervalFp(modulus, fields[0], fields[1], Progression{fields[2], fields[3]});
  }
  throw PreconditionError("bad interval '" + std::string(text) +
                          "', expected M:length[:A:B]");
}

std::vector<Residue> IntervalFp::elements() const {
  std::vector<Residue> out;
  out.reserve(length_);
  for (u64 i = 0; i < length_; ++i) out.push_back((*this)[i]);
  return out;
}

IntervalFp IntervalFp::translated_down(Residue c) const {
  const Residue shift = modulus_.reduce(c);
  if (progression_) {
    return IntervalFp(modulus_, start_, length_,
                      Progression{progression_->step, modulus_.sub(progression_->offset, shift)});
  }
  return IntervalFp(modulus_, modulus_.sub(start_, shift), length_);
}

std::string IntervalFp::to_text() const {
  std::string out = std::to_string(start_) + ":" + std::to_string(length_);
  if (progression_) {
    out += ":" + std::to_string(progression_->step) + ":" +
           std::to_string(progression_->offset);
  }
  return out;
}

}  // namespace fpcheb
