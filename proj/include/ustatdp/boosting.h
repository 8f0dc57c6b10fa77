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

#ifndef USTATDP_BOOSTING_H_
#define USTATDP_BOOSTING_H_

#include <cstdint>
#include <functional>

#include "absl/status/statusor.h"
#include "ustatdp/dataset.h"
#include "ustatdp/privacy_budget.h"
#include "ustatdp/random.h"
#include "ustatdp/report.h"

namespace ustatdp {

struct BoostPlan {
  double alpha = 0.05;
  // Smallest odd integer >= 8 ln(1/alpha); at least 1.
  int q = 1;
  // floor(n / q).
  int64_t chunk_size = 0;
};

// InsufficientData (FailedPrecondition) if floor(n/q) < k.
absl::StatusOr<BoostPlan> MakeBoostPlan(double alpha, int64_t n, int k);

// A private estimator run on one chunk against that chunk's budget.
using ChunkEstimator = std::function<absl::StatusOr<EstimateReport>(
    const Dataset& chunk, PrivacyBudget& budget, Rng& rng)>;

// Runs the estimator on q consecutive chunks (remainder dropped), chunk j
// with seed DeriveSeed(seed, j), and returns the median estimate. The
// chunks are disjoint, so the budget is debited by the largest chunk spend.
// Chunks that return bottom are left out of the median; the result is
// bottom only if every chunk is. With an even number of survivors the two
// middle values are averaged. radius and noise_scale are medians over the
// surviving chunks.
absl::StatusOr<EstimateReport> MedianOfMeans(const ChunkEstimator& estimator,
                                             const Dataset& d,
                                             const BoostPlan& plan,
                                             PrivacyBudget& budget,
                                             uint64_t seed);

}  // namespace ustatdp

#endif  // USTATDP_BOOSTING_H_
