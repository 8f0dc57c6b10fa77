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

#ifndef USTATDP_HARNESS_EXPERIMENT_H_
#define USTATDP_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace ustatdp {

// A Monte Carlo study: one method, one synthetic scenario, a grid of
// (n, eps, alpha, M) cells and a number of trials per cell.
//
// Kernels and the distributions they pair with:
//   identity, pair-mean   gaussian   params mu (0), sigma (1)
//   collision             two-level  params m (100), delta (0)
//   constant              any        params value (0.5)
// Shared params: R (10), tau (overrides the scenario proxy), c (4).
struct ExperimentSpec {
  std::string method = "all";  // naive | all | subsampled | hajek
  std::string kernel = "pair-mean";
  std::string distribution = "gaussian";
  std::map<std::string, double> params;
  std::vector<int64_t> n = {100};
  std::vector<double> eps = {1.0};
  std::vector<double> alpha = {0.05};
  // 0 picks ceil(5 (n/k) ln n). Only the subsampled method reads M.
  std::vector<uint64_t> M = {0};
  int64_t trials = 1;
  uint64_t seed = 1;
  // auto | auto-subgaussian | auto-degenerate | auto-uniformity | <number>
  std::string xi = "auto";
  // Wrap the estimator in a median of means at each cell's alpha.
  bool boost = false;
  bool strict_alg3_scale = false;
  // Adds a wall_time_ms column; rows are then no longer reproducible.
  bool timing = false;
  int threads = 1;
};

// The fixed CSV header, without the optional timing column.
extern const char kExperimentHeader[];

absl::Status ValidateExperimentSpec(const ExperimentSpec& spec);

// Writes the header and one row per (cell, trial), in that order. Cells
// enumerate n, then eps, then alpha, then M, with M varying fastest. Trial
// j of cell c draws its data from DeriveSeed(seed, c, j) so every method
// sees the same samples. Estimator failures and bottoms fill the error
// column and leave estimate empty.
absl::Status RunExperiment(const ExperimentSpec& spec, std::ostream& out);

}  // namespace ustatdp

#endif  // USTATDP_HARNESS_EXPERIMENT_H_
