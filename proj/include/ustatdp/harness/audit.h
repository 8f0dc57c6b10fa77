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

#ifndef USTATDP_HARNESS_AUDIT_H_
#define USTATDP_HARNESS_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ustatdp/dataset.h"
#include "ustatdp/noise.h"

namespace ustatdp {

struct SmoothnessAuditOptions {
  int n = 5;
  double eps = 1;
  double xi = 0;
  double C = 1;
  // "equality" or "constant".
  std::string kernel = "equality";
  // Multiplies S before checking; values below 1 are a negative control.
  double s_scale = 1;
};

struct SmoothnessReport {
  int64_t datasets = 0;
  int64_t pairs = 0;
  // min over (D, D') of S(D) - |A~(D) - A~(D')|.
  double dominance_margin = 0;
  // min over (D, D') of e^eps S(D) - S(D').
  double smoothness_margin = 0;
};

// Enumerates every binary dataset of size n (2 <= n <= 6) and every
// neighbour, with the degree 2 kernel over all pairs, and checks that the
// smooth bound S dominates the change in the reweighted mean and moves by
// at most a factor e^eps. Aborted status naming the first violating pair.
absl::StatusOr<SmoothnessReport> SmoothnessAudit(
    const SmoothnessAuditOptions& o);

struct GofReport {
  int64_t draws = 0;
  double gap = 0;
  double threshold = 0;
  bool passed = false;
  // Accepted draws per Cauchy proposal; 1 for Laplace.
  double acceptance_rate = 1;
};

// Kolmogorov-Smirnov distance between draws at sample_scale and the
// reference CDF at reference_scale (0 means the same scale). The Laplace
// CDF is analytic; the quartic CDF is integrated numerically between
// consecutive order statistics. Passes iff gap <= 1.5 * 1.63 / sqrt(draws).
// InvalidArgument if draws < 1e5.
absl::StatusOr<GofReport> NoiseGof(NoiseLaw law, int64_t draws, uint64_t seed,
                                   double sample_scale = 1,
                                   double reference_scale = 0);

struct AdversarialFixture {
  Dataset d0;
  Dataset d1;
  int64_t b_n = 0;
  // Positions changed between d0 and d1: ceil(1/eps).
  int64_t flipped = 0;
  // C(b_n + flipped - 1, k - 1) / C(n - 1, k - 1).
  double xi = 0;
  // U_n(d1) - U_n(d0) for the equality kernel, from exact binomials.
  double gap = 0;
  // (k / (3 n eps)) xi.
  double bound = 0;
  std::vector<std::string> warnings;
};

// d0 holds 1 at positions 1..b_n and the value i at every later position i,
// with b_n = ceil(k + k^(1/(2k-2)) n^(1-1/(2k-2)) - 1/eps). d1 also sets
// positions b_n+1..b_n+ceil(1/eps) to 1.
absl::StatusOr<AdversarialFixture> MakeAdversarialFixture(int64_t n, int k,
                                                          double eps);

}  // namespace ustatdp

#endif  // USTATDP_HARNESS_AUDIT_H_
