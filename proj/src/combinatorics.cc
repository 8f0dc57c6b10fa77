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

#include "ustatdp/combinatorics.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ustatdp {

BigInt Binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

absl::StatusOr<uint64_t> BinomialWithCap(int64_t n, int64_t k, uint64_t cap) {
  const BigInt b = Binomial(n, k);
  if (b > cap) {
    return absl::OutOfRangeError(
        absl::StrCat("C(", n, ",", k, ") exceeds the enumeration cap ", cap,
                     "; use a subsampled family"));
  }
  return static_cast<uint64_t>(b);
}

double RatioToDouble(const BigInt& num, const BigInt& den) {
  return static_cast<double>(BigRational(num, den));
}

}  // namespace ustatdp
