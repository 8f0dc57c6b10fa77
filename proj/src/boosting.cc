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

#include "ustatdp/boosting.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"

namespace ustatdp {

absl::StatusOr<BoostPlan> MakeBoostPlan(double alpha, int64_t n, int k) {
  if (!(alpha > 0 && alpha <= 1)) {
    return absl::InvalidArgumentError("alpha must be in (0, 1]");
  }
  BoostPlan plan;
  plan.alpha = alpha;
  int q = static_cast<int>(std::ceil(8 * std::log(1 / alpha) - 1e-12));
  q = std::max(q, 1);
  if (q % 2 == 0) ++q;
  plan.q = q;
  plan.chunk_size = n / q;
  if (plan.chunk_size < k) {
    return absl::FailedPreconditionError(absl::StrCat(
        "median of means with q=", q, " chunks needs n >= ", int64_t{q} * k,
        ", got n=", n));
  }
  return plan;
}

namespace {

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

absl::StatusOr<EstimateReport> MedianOfMeans(const ChunkEstimator& estimator,
                                             const Dataset& d,
                                             const BoostPlan& plan,
                                             PrivacyBudget& budget,
                                             uint64_t seed) {
  if (plan.q < 1 || plan.chunk_size < 1 ||
      static_cast<int64_t>(d.size()) < plan.q * plan.chunk_size) {
    return absl::FailedPreconditionError("dataset too small for the plan");
  }
  std::vector<PrivacyBudget> branches;
  std::vector<double> estimates, radii, scales;
  EstimateReport out;
  std::string reasons;
  for (int j = 0; j < plan.q; ++j) {
    const Dataset chunk =
        d.Slice(j * plan.chunk_size, (j + 1) * plan.chunk_size);
    branches.push_back(budget.Fork());
    Rng rng(DeriveSeed(seed, j));
    auto r = estimator(chunk, branches.back(), rng);
    if (!r.ok()) return r.status();
    for (auto& w : r->warnings) {
      if (std::find(out.warnings.begin(), out.warnings.end(), w) ==
          out.warnings.end()) {
        out.warnings.push_back(w);
      }
    }
    if (r->bottom) {
      absl::StrAppend(&reasons, reasons.empty() ? "" : "; ", "chunk ", j + 1,
                      ": ", r->bottom_reason);
      continue;
    }
    estimates.push_back(r->estimate);
    radii.push_back(r->radius);
    scales.push_back(r->noise_scale);
    out.iterations = std::max(out.iterations, r->iterations);
    out.L = std::max(out.L, r->L);
    out.bad_count += r->bad_count;
  }
  if (auto s = budget.MergeParallel(branches, absl::StrCat(
                                                  "median of ", plan.q,
                                                  " chunks"));
      !s.ok()) {
    return s;
  }
  if (estimates.empty()) {
    out.bottom = true;
    out.bottom_reason = reasons;
    return out;
  }
  if (!reasons.empty()) {
    out.warnings.push_back(absl::StrCat("bottom in ", reasons));
  }
  out.estimate = Median(estimates);
  out.radius = Median(radii);
  out.noise_scale = Median(scales);
  return out;
}

}  // namespace ustatdp
