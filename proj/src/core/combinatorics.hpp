// Copyright 2026 The epcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace epc {

// Calls fn(span of k ascending indices in [0, n)) for every k-subset in
// lexicographic order. fn returns false to stop early. Returns false iff
// stopped.
template <typename Fn>
bool for_each_combination(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::uint32_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(std::span<const std::uint32_t>(idx))) return false;
    std::uint32_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::uint32_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Odometer over [0, base)^len, most significant digit first. Returns false
// after the last tuple.
inline bool next_tuple(std::vector<std::uint32_t>& digits, std::uint32_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

// Checked integer power; returns 0 on overflow past `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return 0;
    r *= base;
  }
  return r <= limit ? r : 0;
}

}  // namespace epc
