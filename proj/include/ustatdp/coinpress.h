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

#ifndef USTATDP_COINPRESS_H_
#define USTATDP_COINPRESS_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ustatdp/dataset.h"
#include "ustatdp/kernel.h"
#include "ustatdp/privacy_budget.h"
#include "ustatdp/random.h"
#include "ustatdp/report.h"
#include "ustatdp/subset_family.h"

namespace ustatdp {

// q(beta) bounds sup_S |h(X_S) - theta| and q_avg(beta) bounds the
// deviation of the family average, each with probability 1 - beta.
struct TailBounds {
  std::function<double(double)> q;
  std::function<double(double)> q_avg;
};

// Disjoint chunks, m = floor(n/k) values.
TailBounds NaiveTailBounds(double tau, int64_t m);
TailBounds AllTuplesTailBounds(double tau, int k, int64_t n);
TailBounds SubsampledTailBounds(double tau, int k, int64_t n, uint64_t m);

struct IntervalState {
  double lo = 0;
  double hi = 0;
  int iteration = 0;
};

struct StepResult {
  IntervalState interval;
  double release = 0;
  double delta = 0;
  double noise_scale = 0;
};

// One refinement: clips values in place to [lo - q(beta), hi + q(beta)],
// releases their mean plus Lap(delta/eps_step) with
// delta = dep (hi - lo + 2 q(beta)), and returns the interval of half-width
// q_avg(beta) + (delta/eps_step) log(1/beta) around the release.
absl::StatusOr<StepResult> UStatOneStep(std::span<double> values, double dep,
                                        const IntervalState& in,
                                        double eps_step, double beta,
                                        const TailBounds& tb,
                                        PrivacyBudget& budget, Rng& rng);

struct CoinPressOptions {
  // A priori bound |theta| <= R.
  double R = 1;
  // Sub-Gaussian proxy of h(X_S); unused by UStatMean itself.
  double tau = 1;
  double eps = 1;
  double gamma = 0.01;
  // Multiplier on log2(R / q(gamma)) when choosing the number of steps.
  double t_constant = 1;
};

// Number of halving steps: max(1, ceil(t_constant log2(R / q(gamma)))).
int CoinPressSteps(const CoinPressOptions& o, const TailBounds& tb);

// t steps at eps/(2t) and confidence gamma/t, then one step at eps/2 and
// confidence gamma. Returns the final release; radius is the final
// half-width. Warns when the sample-size conditions for the accuracy
// guarantee do not hold.
absl::StatusOr<EstimateReport> UStatMean(std::vector<double> values,
                                         double dep, const CoinPressOptions& o,
                                         const TailBounds& tb,
                                         PrivacyBudget& budget, Rng& rng);

absl::StatusOr<EstimateReport> NaiveEstimator(const Kernel& h,
                                              const Dataset& d,
                                              const CoinPressOptions& o,
                                              PrivacyBudget& budget, Rng& rng);
absl::StatusOr<EstimateReport> AllTuplesEstimator(const Kernel& h,
                                                  const Dataset& d,
                                                  const CoinPressOptions& o,
                                                  PrivacyBudget& budget,
                                                  Rng& rng);
// The family seed is drawn from rng.
absl::StatusOr<EstimateReport> SubsampledEstimator(const Kernel& h,
                                                   const Dataset& d,
                                                   const CoinPressOptions& o,
                                                   uint64_t m,
                                                   PrivacyBudget& budget,
                                                   Rng& rng);

}  // namespace ustatdp

#endif  // USTATDP_COINPRESS_H_
