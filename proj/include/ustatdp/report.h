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

#ifndef USTATDP_REPORT_H_
#define USTATDP_REPORT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace ustatdp {

struct EstimateReport {
  double estimate = 0;
  // Half-width of the interval the estimator vouches for at its internal
  // confidence level.
  double radius = 0;
  // Scale of the final noise draw (Laplace b, or the multiplier of Z).
  double noise_scale = 0;
  // Interval-refinement steps, including the final one.
  int iterations = 0;
  int64_t L = 0;
  int64_t bad_count = 0;
  bool bottom = false;
  std::string bottom_reason;
  std::vector<std::string> warnings;
};

}  // namespace ustatdp

#endif  // USTATDP_REPORT_H_
