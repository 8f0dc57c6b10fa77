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

#ifndef USTATDP_VARIANCE_H_
#define USTATDP_VARIANCE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ustatdp/kernel.h"
#include "ustatdp/random.h"

namespace ustatdp {

// zeta_c and delta_c^2 for c = 1..k, stored at index c-1.
struct VarianceProfile {
  std::vector<double> zetas;
  std::vector<double> deltas;

  static VarianceProfile FromZetas(std::vector<double> zetas);
};

// delta_c^2 = sum_{i<=c} (-1)^(c-i) C(c,i) zeta_i.
std::vector<double> HoeffdingDeltas(std::span<const double> zetas);
// zeta_c = sum_{i<=c} C(c,i) delta_i^2.
std::vector<double> ZetasFromDeltas(std::span<const double> deltas);
// One-based c with delta_c^2 < -tol. Diagnostic for empirical profiles.
std::vector<int> NegativeDeltas(std::span<const double> deltas, double tol);

// w_c = C(k,c) C(n-k,k-c) / C(n,k), so var(U_n) = sum_c w_c zeta_c.
absl::StatusOr<std::vector<double>> VarianceWeights(int64_t n, int k);
absl::StatusOr<double> VarianceOfUStat(std::span<const double> zetas,
                                       int64_t n, int k);

// k^2 zeta_1 / n, or k^2 (k-1)^2 zeta_2 / (2n(n-1)) when degenerate.
// InvalidArgument if degenerate is claimed while zeta_1 > tol.
absl::StatusOr<double> VarianceLeadingTerm(std::span<const double> zetas,
                                           int64_t n, int k, bool degenerate,
                                           double tol = 1e-12);

struct ZetaEstimate {
  double value = 0;
  double se = 0;
};

// Draws one data point.
using PointSampler = std::function<double(Rng&)>;

// Unbiased Monte Carlo estimate of zeta_c: the average of
// h(S1) h(S2) - h(S3) h(S4), where |S1 ∩ S2| = c and S3, S4 are fresh and
// disjoint, so the second product estimates theta^2 independently.
absl::StatusOr<ZetaEstimate> EmpiricalZeta(const Kernel& h,
                                           const PointSampler& sampler, int c,
                                           int64_t trials, uint64_t seed);

}  // namespace ustatdp

#endif  // USTATDP_VARIANCE_H_
