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

#ifndef USTATDP_HAJEK_H_
#define USTATDP_HAJEK_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ustatdp/coinpress.h"
#include "ustatdp/dataset.h"
#include "ustatdp/kernel.h"
#include "ustatdp/privacy_budget.h"
#include "ustatdp/random.h"
#include "ustatdp/report.h"
#include "ustatdp/subset_family.h"
#include "ustatdp/ustat.h"

namespace ustatdp {

struct HajekParams {
  double eps = 1;
  // Additive range of the kernel.
  double C = 1;
  // Concentration radius of the local projections around A_n.
  double xi = 0;
  // Release with S/eps * Z instead of the 10 S/eps * Z the smooth
  // sensitivity mechanism calls for. Not private at the stated eps.
  bool strict_alg3_scale = false;
};

struct HajekState {
  double mean = 0;
  std::vector<double> projections;
  int64_t L = 1;
  std::vector<uint32_t> good;
  std::vector<uint32_t> bad;
  std::vector<double> weights;
  double reweighted = 0;
  double smooth_bound = 0;
};

// Smallest t >= 1 with #{i : dev_i > xi + 6kCt/n} <= t.
int64_t ComputeL(std::span<const double> abs_devs, double xi, double C, int k,
                 int64_t n);

// max(0, 1 - (eps n / 6Ck) dist(dev_i, [-b, b])), b = xi + 6kCL/n. With
// C = 0 the ramp is a step: weight 1 inside the interval, 0 outside.
std::vector<double> ComputeWeights(std::span<const double> signed_devs,
                                   double xi, double C, int k, int64_t n,
                                   int64_t L, double eps);

// (k/n)(xi + kCL/n)(1 + eps L) + (k^2 C L^2 min(k,L) / n^2)(eps + k/n)
//   + k^2 C / (n^2 eps).
// The min(k, L) factor is dropped for the all-tuples family.
double SmoothBoundG(double xi, int64_t L, int64_t n, int k, double C,
                    double eps, bool all_tuples);

// max over l = 0..n of exp(-eps l) g(xi, L + l).
double SmoothSensitivity(double xi, int64_t L, int64_t n, int k, double C,
                         double eps, bool all_tuples);

// Every quantity up to and including S. Does not check regularity.
absl::StatusOr<HajekState> ComputeHajekState(const TupleStatistic& t,
                                             const HajekParams& p);

// Returns bottom (without spending) if the family fails the regularity
// check; otherwise releases A~_n plus quartic noise and debits eps.
// radius is the 99% two-sided quantile of the added noise.
absl::StatusOr<EstimateReport> PrivateMeanLocalHajek(
    const TupleStatistic& t, const HajekParams& p, PrivacyBudget& budget,
    Rng& rng, HajekState* state = nullptr);

absl::StatusOr<EstimateReport> PrivateMeanLocalHajek(
    const Kernel& h, const Dataset& d, std::shared_ptr<const SubsetFamily> f,
    const HajekParams& p, PrivacyBudget& budget, Rng& rng,
    HajekState* state = nullptr);

// C sqrt((k/n) log(2n/alpha)) + (8Ck/(3n)) log(2n/alpha).
double DegenerateXi(double C, int k, int64_t n, double alpha);

struct PipelineOptions {
  double R = 1;
  double tau = 1;
  double eps = 1;
  double alpha = 0.05;
  // Clipping half-width is c sqrt(k tau log(n/alpha)).
  double c = 4;
  double gamma = 0.01;
  bool strict_alg3_scale = false;
};

// Coarse naive estimate on the first half at eps/2, then the Hajek
// estimator at eps/2 on the second half with h clipped around it.
absl::StatusOr<EstimateReport> SubGaussianPipeline(const Kernel& h,
                                                   const Dataset& d,
                                                   const PipelineOptions& o,
                                                   PrivacyBudget& budget,
                                                   Rng& rng);

}  // namespace ustatdp

#endif  // USTATDP_HAJEK_H_
