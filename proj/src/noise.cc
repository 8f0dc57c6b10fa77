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

#include "ustatdp/noise.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "boost/math/quadrature/gauss_kronrod.hpp"

namespace ustatdp {

absl::StatusOr<NoiseSample> SampleLaplace(double scale, Rng& rng) {
  if (!(scale > 0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise scale must be positive, got ", scale));
  }
  return NoiseSample{rng.Laplace(scale), scale, NoiseLaw::kLaplace, 1};
}

absl::StatusOr<NoiseSample> SampleLaplace(double scale, uint64_t seed) {
  Rng rng(seed);
  return SampleLaplace(scale, rng);
}

NoiseSample SampleQuartic(Rng& rng) {
  // f/g = sqrt2 (1+z^2)/(1+z^4), maximized at z^2 = sqrt2 - 1 where
  // (1+z^2)/(1+z^4) = (1+sqrt2)/2.
  constexpr double kPeak = (1 + std::numbers::sqrt2) / 2;
  int proposals = 0;
  while (true) {
    ++proposals;
    const double z = rng.Cauchy();
    const double z2 = z * z;
    const double accept = (1 + z2) / (1 + z2 * z2) / kPeak;
    if (rng.Uniform() < accept) {
      return NoiseSample{z, 1.0, NoiseLaw::kQuartic, proposals};
    }
  }
}

NoiseSample SampleQuartic(uint64_t seed) {
  Rng rng(seed);
  return SampleQuartic(rng);
}

double LaplaceCdf(double z, double scale) {
  if (z < 0) return 0.5 * std::exp(z / scale);
  return 1 - 0.5 * std::exp(-z / scale);
}

double QuarticDensity(double z) {
  const double z2 = z * z;
  return 1 / (kQuarticNormalizer * (1 + z2 * z2));
}

double QuarticCdf(double z) {
  using boost::math::quadrature::gauss_kronrod;
  if (z < 0) return 1 - QuarticCdf(-z);
  if (z == 0) return 0.5;
  if (std::isinf(z)) return 1.0;
  const double half = gauss_kronrod<double, 61>::integrate(
      QuarticDensity, 0.0, z, 15, 1e-14);
  return 0.5 + half;
}

double QuarticQuantile(double p) {
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -QuarticQuantile(1 - p);
  double lo = 0, hi = 1;
  while (QuarticCdf(hi) < p) hi *= 2;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (QuarticCdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

absl::StatusOr<double> GlobalSensitivityRelease(double value, double gs,
                                                double eps,
                                                PrivacyBudget& budget,
                                                Rng& rng, std::string label) {
  if (!(gs >= 0)) {
    return absl::InvalidArgumentError("sensitivity must be non-negative");
  }
  if (auto s = budget.Spend(eps, std::move(label)); !s.ok()) return s;
  if (gs == 0) return value;
  return value + rng.Laplace(gs / eps);
}

absl::StatusOr<double> SmoothSensitivityRelease(double value, double ss,
                                                double eps,
                                                PrivacyBudget& budget,
                                                Rng& rng, double factor,
                                                std::string label) {
  if (!(ss >= 0)) {
    return absl::InvalidArgumentError("smooth bound must be non-negative");
  }
  if (auto s = budget.Spend(eps, std::move(label)); !s.ok()) return s;
  if (ss == 0) return value;
  return value + factor * ss / eps * SampleQuartic(rng).value;
}

}  // namespace ustatdp
