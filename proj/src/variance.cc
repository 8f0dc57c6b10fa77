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

#include "ustatdp/variance.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "ustatdp/combinatorics.h"

namespace ustatdp {

VarianceProfile VarianceProfile::FromZetas(std::vector<double> zetas) {
  VarianceProfile p;
  p.deltas = HoeffdingDeltas(zetas);
  p.zetas = std::move(zetas);
  return p;
}

std::vector<double> HoeffdingDeltas(std::span<const double> zetas) {
  std::vector<double> d(zetas.size());
  for (size_t c = 1; c <= zetas.size(); ++c) {
    double s = 0;
    for (size_t i = 1; i <= c; ++i) {
      const double sign = (c - i) % 2 ? -1.0 : 1.0;
      s += sign * static_cast<double>(Binomial(c, i)) * zetas[i - 1];
    }
    d[c - 1] = s;
  }
  return d;
}

std::vector<double> ZetasFromDeltas(std::span<const double> deltas) {
  std::vector<double> z(deltas.size());
  for (size_t c = 1; c <= deltas.size(); ++c) {
    double s = 0;
    for (size_t i = 1; i <= c; ++i) {
      s += static_cast<double>(Binomial(c, i)) * deltas[i - 1];
    }
    z[c - 1] = s;
  }
  return z;
}

std::vector<int> NegativeDeltas(std::span<const double> deltas, double tol) {
  std::vector<int> out;
  for (size_t c = 0; c < deltas.size(); ++c) {
    if (deltas[c] < -tol) out.push_back(static_cast<int>(c + 1));
  }
  return out;
}

absl::StatusOr<std::vector<double>> VarianceWeights(int64_t n, int k) {
  if (k < 1 || n < k) {
    return absl::InvalidArgumentError(
        absl::StrCat("need 1 <= k <= n, got n=", n, " k=", k));
  }
  const BigInt total = Binomial(n, k);
  std::vector<double> w(k);
  for (int c = 1; c <= k; ++c) {
    w[c - 1] = RatioToDouble(Binomial(k, c) * Binomial(n - k, k - c), total);
  }
  return w;
}

absl::StatusOr<double> VarianceOfUStat(std::span<const double> zetas,
                                       int64_t n, int k) {
  if (static_cast<int>(zetas.size()) != k) {
    return absl::InvalidArgumentError("profile must have k entries");
  }
  auto w = VarianceWeights(n, k);
  if (!w.ok()) return w.status();
  double v = 0;
  for (int c = 0; c < k; ++c) v += (*w)[c] * zetas[c];
  return v;
}

absl::StatusOr<double> VarianceLeadingTerm(std::span<const double> zetas,
                                           int64_t n, int k, bool degenerate,
                                           double tol) {
  if (k < 1 || 2 * static_cast<int64_t>(k) > n) {
    return absl::InvalidArgumentError("leading term needs k <= n/2");
  }
  if (static_cast<int>(zetas.size()) != k) {
    return absl::InvalidArgumentError("profile must have k entries");
  }
  const double kk = k, nn = static_cast<double>(n);
  if (!degenerate) return kk * kk * zetas[0] / nn;
  if (zetas[0] > tol) {
    return absl::InvalidArgumentError(absl::StrCat(
        "degenerate form requested but zeta_1 = ", zetas[0]));
  }
  if (k < 2) return 0.0;
  return kk * kk * (kk - 1) * (kk - 1) * zetas[1] / (2 * nn * (nn - 1));
}

absl::StatusOr<ZetaEstimate> EmpiricalZeta(const Kernel& h,
                                           const PointSampler& sampler, int c,
                                           int64_t trials, uint64_t seed) {
  const int k = h.degree();
  if (c < 1 || c > k) {
    return absl::InvalidArgumentError(
        absl::StrCat("overlap c must be in [1, ", k, "], got ", c));
  }
  if (trials < 2) return absl::InvalidArgumentError("need at least 2 trials");
  Rng rng(seed);
  std::vector<double> x(2 * k), s1(k), s2(k), s3(k), s4(k);
  double mean = 0, m2 = 0;
  for (int64_t t = 0; t < trials; ++t) {
    for (int i = 0; i < 2 * k - c; ++i) x[i] = sampler(rng);
    for (int i = 0; i < k; ++i) s1[i] = x[i];
    for (int i = 0; i < c; ++i) s2[i] = x[i];
    for (int i = c; i < k; ++i) s2[i] = x[k + i - c];
    const double overlap = h(s1) * h(s2);
    for (int i = 0; i < k; ++i) s3[i] = sampler(rng);
    for (int i = 0; i < k; ++i) s4[i] = sampler(rng);
    const double d = overlap - h(s3) * h(s4);
    // Welford update.
    const double delta = d - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (d - mean);
  }
  const double var = m2 / static_cast<double>(trials - 1);
  return ZetaEstimate{mean, std::sqrt(var / static_cast<double>(trials))};
}

}  // namespace ustatdp
