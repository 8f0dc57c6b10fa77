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

#ifndef USTATDP_ESTIMATE_H_
#define USTATDP_ESTIMATE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "ustatdp/boosting.h"
#include "ustatdp/kernel.h"
#include "ustatdp/subset_family.h"

namespace ustatdp {

// How to run one of the four estimators on a dataset.
struct EstimatorSpec {
  // naive | all | subsampled | hajek
  std::string method = "all";
  double eps = 1;
  double R = 10;
  // Defaults to the kernel's proxy.
  std::optional<double> tau;
  // Subsampled family size; 0 picks ceil(5 (n/k) ln n).
  uint64_t M = 0;
  // auto | auto-subgaussian | auto-degenerate | auto-uniformity | value
  std::string xi_mode = "auto";
  double xi = 0;
  // Defaults to the kernel's range.
  std::optional<double> C;
  // Failure probability for the data-driven xi choices.
  double alpha = 0.05;
  // Atom count for auto-uniformity.
  int m = 0;
  // Clipping constant of the sub-Gaussian pipeline.
  double c = 4;
  bool strict_alg3_scale = false;
  // Hajek on this family instead of all tuples.
  std::shared_ptr<const SubsetFamily> family;
};

uint64_t DefaultSubsampleSize(int64_t n, int k);

// The estimator as a per-chunk procedure, ready for MedianOfMeans. A
// kernel named "collision" is evaluated by category counts under hajek.
absl::StatusOr<ChunkEstimator> MakeChunkEstimator(const Kernel& h,
                                                  const EstimatorSpec& spec);

}  // namespace ustatdp

#endif  // USTATDP_ESTIMATE_H_
