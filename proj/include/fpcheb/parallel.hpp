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

#include <future>
#include <thread>
#include <vector>

#include "fpcheb/modulus.hpp"

namespace fpcheb {

// Splits [0, n) into `workers` contiguous chunks, runs fn(begin, end) on each
// concurrently and returns the results in chunk order. Exceptions from any
// chunk propagate to the caller.
template <class Fn>
auto parallel_chunks(u64 n, unsigned workers, Fn fn)
    -> std::vector<decltype(fn(u64{}, u64{}))> {
  using Result = decltype(fn(u64{}, u64{}));
  if (workers == 0) workers = 1;
  if (workers > n) workers = static_cast<unsigned>(n == 0 ? 1 : n);
  std::vector<Result> results;
  results.reserve(workers);
  if (workers == 1) {
    results.push_back(fn(u64{0}, n));
    return results;
  }
  std::vector<std::future<Result>> futures;
  futures.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const u64 begin = n * w / workers;
    const u64 end = n * (w + 1) / workers;
    futures.push_back(std::async(std::launch::async, fn, begin, end));
  }
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace fpcheb
