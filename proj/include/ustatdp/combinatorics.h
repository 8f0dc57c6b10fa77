// Copyright 2026 The ustatdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef USTATDP_COMBINATORICS_H_
#define USTATDP_COMBINATORICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "boost/multiprecision/cpp_int.hpp"

namespace ustatdp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Default refusal threshold for enumerating all k-subsets.
inline constexpr uint64_t kDefaultTupleCap = 100'000'000;

// Exact C(n, k); zero when k < 0 or k > n.
BigInt Binomial(int64_t n, int64_t k);

// C(n, k) as a machine word. OutOfRange if it exceeds cap.
absl::StatusOr<uint64_t> BinomialWithCap(int64_t n, int64_t k,
                                         uint64_t cap = kDefaultTupleCap);

// Exact num/den rounded once to double.
double RatioToDouble(const BigInt& num, const BigInt& den);

// Calls fn(std::span<const uint32_t>) for every k-subset of {0..n-1} in
// lexicographic order. Returns early if fn returns false.
template <typename Fn>
void ForEachCombination(uint32_t n, uint32_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<uint32_t> idx(k);
  for (uint32_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(std::span<const uint32_t>(idx))) return;
    int64_t pos = static_cast<int64_t>(k) - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (uint32_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace ustatdp

#endif  // USTATDP_COMBINATORICS_H_
