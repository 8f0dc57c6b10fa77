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

#include "ustatdp/estimate.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "ustatdp/applications.h"
#include "ustatdp/coinpress.h"
#include "ustatdp/hajek.h"
#include "ustatdp/ustat.h"

namespace ustatdp {

uint64_t DefaultSubsampleSize(int64_t n, int k) {
  const double nn = static_cast<double>(n);
  return static_cast<uint64_t>(std::ceil(5 * nn / k * std::log(nn)));
}

absl::StatusOr<ChunkEstimator> MakeChunkEstimator(const Kernel& h,
                                                  const EstimatorSpec& s) {
  if (!(s.eps > 0)) return absl::InvalidArgumentError("eps must be positive");
  const std::optional<double> tau = s.tau ? s.tau : h.tau();
  const std::optional<double> C = s.C ? s.C : h.range();
  CoinPressOptions co;
  co.R = s.R;
  co.eps = s.eps;
  co.tau = tau.value_or(0.25);
  if (s.method == "naive") {
    return ChunkEstimator([=](const Dataset& d, PrivacyBudget& b, Rng& rng) {
      return NaiveEstimator(h, d, co, b, rng);
    });
  }
  if (s.method == "all") {
    return ChunkEstimator([=](const Dataset& d, PrivacyBudget& b, Rng& rng) {
      return AllTuplesEstimator(h, d, co, b, rng);
    });
  }
  if (s.method == "subsampled") {
    const uint64_t fixed = s.M;
    return ChunkEstimator([=](const Dataset& d, PrivacyBudget& b, Rng& rng) {
      const uint64_t m =
          fixed ? fixed : DefaultSubsampleSize(d.size(), h.degree());
      return SubsampledEstimator(h, d, co, m, b, rng);
    });
  }
  if (s.method != "hajek") {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown method '", s.method, "'"));
  }
  std::string mode = s.xi_mode;
  if (mode == "auto") mode = C ? "auto-degenerate" : "auto-subgaussian";
  if (mode == "auto-subgaussian") {
    if (!tau) {
      return absl::InvalidArgumentError(
          "the sub-Gaussian pipeline needs a variance proxy tau");
    }
    PipelineOptions po;
    po.R = s.R;
    po.tau = *tau;
    po.eps = s.eps;
    po.alpha = s.alpha;
    po.c = s.c;
    po.strict_alg3_scale = s.strict_alg3_scale;
    return ChunkEstimator([=](const Dataset& d, PrivacyBudget& b, Rng& rng) {
      return SubGaussianPipeline(h, d, po, b, rng);
    });
  }
  if (!C) {
    return absl::InvalidArgumentError(
        "this xi choice needs a bounded kernel or an explicit C");
  }
  if (mode == "auto-uniformity" && s.m < 2) {
    return absl::InvalidArgumentError("auto-uniformity needs m >= 2");
  }
  if (mode != "auto-degenerate" && mode != "auto-uniformity" &&
      mode != "value") {
    return absl::InvalidArgumentError(absl::StrCat("bad xi mode '", mode, "'"));
  }
  HajekParams base;
  base.eps = s.eps;
  base.C = *C;
  base.xi = s.xi;
  base.strict_alg3_scale = s.strict_alg3_scale;
  const bool collision = h.name() == "collision" && !s.family;
  return ChunkEstimator([=](const Dataset& d, PrivacyBudget& b,
                            Rng& rng) -> absl::StatusOr<EstimateReport> {
    const int64_t n = static_cast<int64_t>(d.size());
    HajekParams p = base;
    if (mode == "auto-uniformity") p.xi = UniformityXi(s.m, n, 0.01);
    if (mode == "auto-degenerate") {
      p.xi = DegenerateXi(p.C, h.degree(), n, s.alpha);
    }
    if (collision) {
      auto stat = CollisionPairs::Build(d);
      if (!stat.ok()) return stat.status();
      return PrivateMeanLocalHajek(*stat, p, b, rng);
    }
    std::shared_ptr<const SubsetFamily> f = s.family;
    if (!f) {
      auto all = SubsetFamily::AllTuples(n, h.degree());
      if (!all.ok()) return all.status();
      f = std::make_shared<const SubsetFamily>(*std::move(all));
    }
    return PrivateMeanLocalHajek(h, d, f, p, b, rng);
  });
}

}  // namespace ustatdp
