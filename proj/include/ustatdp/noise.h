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

#ifndef USTATDP_NOISE_H_
#define USTATDP_NOISE_H_

#include <cstdint>
#include <numbers>
#include <string>

#include "absl/status/statusor.h"
#include "ustatdp/privacy_budget.h"
#include "ustatdp/random.h"

namespace ustatdp {

enum class NoiseLaw { kLaplace, kQuartic };

struct NoiseSample {
  double value = 0;
  double scale = 1;
  NoiseLaw law = NoiseLaw::kLaplace;
  // Cauchy proposals consumed; always 1 for Laplace.
  int proposals = 1;
};

// Integral of 1 / (1 + z^4) over the real line.
inline constexpr double kQuarticNormalizer =
    std::numbers::pi / std::numbers::sqrt2;
// Expected Cauchy proposals per accepted quartic draw.
inline constexpr double kQuarticEnvelope = (2 + std::numbers::sqrt2) / 2;

// InvalidArgument unless scale > 0.
absl::StatusOr<NoiseSample> SampleLaplace(double scale, Rng& rng);
absl::StatusOr<NoiseSample> SampleLaplace(double scale, uint64_t seed);

// Unit-scale draw from density (sqrt2/pi) / (1 + z^4) by rejection from a
// standard Cauchy proposal.
NoiseSample SampleQuartic(Rng& rng);
NoiseSample SampleQuartic(uint64_t seed);

double LaplaceCdf(double z, double scale);
double QuarticDensity(double z);
// By adaptive Gauss-Kronrod quadrature of the density.
double QuarticCdf(double z);
// Inverse of QuarticCdf by bisection.
double QuarticQuantile(double p);

// value + Lap(gs/eps). Debits eps. gs = 0 returns value unchanged.
absl::StatusOr<double> GlobalSensitivityRelease(
    double value, double gs, double eps, PrivacyBudget& budget, Rng& rng,
    std::string label = "laplace release");

// value + (factor * ss / eps) Z with Z quartic. factor defaults to 10.
// Debits eps. ss = 0 returns value unchanged.
absl::StatusOr<double> SmoothSensitivityRelease(
    double value, double ss, double eps, PrivacyBudget& budget, Rng& rng,
    double factor = 10.0, std::string label = "smooth release");

}  // namespace ustatdp

#endif  // USTATDP_NOISE_H_
