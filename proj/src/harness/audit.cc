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

#include "ustatdp/harness/audit.h"

#include <algorithm>
#include <cmath>
#include <memory>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "boost/math/quadrature/gauss_kronrod.hpp"
#include "ustatdp/combinatorics.h"
#include "ustatdp/hajek.h"
#include "ustatdp/kernel.h"
#include "ustatdp/random.h"
#include "ustatdp/sensitivity.h"
#include "ustatdp/subset_family.h"
#include "ustatdp/ustat.h"

namespace ustatdp {

namespace {

std::string Bits(const Dataset& d) {
  std::string s;
  for (double v : d.points) s += v != 0 ? '1' : '0';
  return s;
}

}  // namespace

absl::StatusOr<SmoothnessReport> SmoothnessAudit(
    const SmoothnessAuditOptions& o) {
  if (o.n < 2 || o.n > 6) {
    return absl::InvalidArgumentError("audit needs 2 <= n <= 6");
  }
  Kernel h = kernels::Equality(2);
  if (o.kernel == "constant") {
    h = kernels::Constant(2, 0.5);
  } else if (o.kernel != "equality") {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown audit kernel '", o.kernel, "'"));
  }
  auto family = SubsetFamily::AllTuples(o.n, 2);
  if (!family.ok()) return family.status();
  auto shared = std::make_shared<const SubsetFamily>(*family);
  HajekParams p;
  p.eps = o.eps;
  p.C = o.C;
  p.xi = o.xi;

  // Index datasets by their bit pattern, position i is bit i.
  const int count = 1 << o.n;
  std::vector<double> reweighted(count), bound(count);
  const double alphabet[] = {0.0, 1.0};
  absl::Status status;
  ForEachDataset(o.n, alphabet, [&](const Dataset& d) {
    if (!status.ok()) return;
    int code = 0;
    for (int i = 0; i < o.n; ++i) code |= (d[i] != 0) << i;
    auto table = TupleTable::Build(h, d, shared);
    if (!table.ok()) {
      status = table.status();
      return;
    }
    auto st = ComputeHajekState(*table, p);
    if (!st.ok()) {
      status = st.status();
      return;
    }
    reweighted[code] = st->reweighted;
    bound[code] = o.s_scale * st->smooth_bound;
  });
  if (!status.ok()) return status;

  SmoothnessReport r;
  r.datasets = count;
  r.dominance_margin = INFINITY;
  r.smoothness_margin = INFINITY;
  const double growth = std::exp(o.eps);
  constexpr double kSlack = 1e-12;
  for (int code = 0; code < count; ++code) {
    for (int i = 0; i < o.n; ++i) {
      const int nb = code ^ (1 << i);
      ++r.pairs;
      const double dom =
          bound[code] - std::fabs(reweighted[code] - reweighted[nb]);
      const double smooth = growth * bound[code] - bound[nb];
      r.dominance_margin = std::min(r.dominance_margin, dom);
      r.smoothness_margin = std::min(r.smoothness_margin, smooth);
      if (dom < -kSlack || smooth < -kSlack) {
        Dataset a, b;
        for (int j = 0; j < o.n; ++j) {
          a.points.push_back((code >> j) & 1);
          b.points.push_back((nb >> j) & 1);
        }
        return absl::AbortedError(absl::StrFormat(
            "%s violated at D=%s D'=%s: S(D)=%.6g S(D')=%.6g "
            "|A(D)-A(D')|=%.6g",
            dom < -kSlack ? "dominance" : "smoothness", Bits(a), Bits(b),
            bound[code], bound[nb],
            std::fabs(reweighted[code] - reweighted[nb])));
      }
    }
  }
  return r;
}

absl::StatusOr<GofReport> NoiseGof(NoiseLaw law, int64_t draws, uint64_t seed,
                                   double sample_scale,
                                   double reference_scale) {
  if (draws < 100000) {
    return absl::InvalidArgumentError("goodness of fit needs >= 1e5 draws");
  }
  if (!(sample_scale > 0) || reference_scale < 0) {
    return absl::InvalidArgumentError("scales must be positive");
  }
  if (reference_scale == 0) reference_scale = sample_scale;
  Rng rng(seed);
  std::vector<double> x(draws);
  int64_t proposals = 0;
  for (auto& v : x) {
    if (law == NoiseLaw::kLaplace) {
      v = rng.Laplace(sample_scale);
      ++proposals;
    } else {
      const NoiseSample s = SampleQuartic(rng);
      v = sample_scale * s.value;
      proposals += s.proposals;
    }
  }
  std::sort(x.begin(), x.end());
  using boost::math::quadrature::gauss_kronrod;
  const auto density = [reference_scale](double z) {
    return QuarticDensity(z / reference_scale) / reference_scale;
  };
  const double nn = static_cast<double>(draws);
  double gap = 0, cdf = 0;
  for (int64_t i = 0; i < draws; ++i) {
    if (law == NoiseLaw::kLaplace) {
      cdf = LaplaceCdf(x[i], reference_scale);
    } else if (i == 0) {
      cdf = QuarticCdf(x[0] / reference_scale);
    } else if (x[i] != x[i - 1]) {
      cdf += gauss_kronrod<double, 15>::integrate(density, x[i - 1], x[i], 5,
                                                  1e-14);
    }
    gap = std::max({gap, std::fabs(cdf - i / nn),
                    std::fabs(cdf - (i + 1) / nn)});
  }
  GofReport r;
  r.draws = draws;
  r.gap = gap;
  r.threshold = 1.5 * 1.63 / std::sqrt(nn);
  r.passed = gap <= r.threshold;
  r.acceptance_rate = nn / static_cast<double>(proposals);
  return r;
}

absl::StatusOr<AdversarialFixture> MakeAdversarialFixture(int64_t n, int k,
                                                          double eps) {
  if (k < 2) return absl::InvalidArgumentError("fixture needs k >= 2");
  if (!(eps > 0)) return absl::InvalidArgumentError("eps must be positive");
  const double e = 1.0 / (2 * k - 2);
  AdversarialFixture f;
  f.b_n = static_cast<int64_t>(std::ceil(
      k + std::pow(k, e) * std::pow(static_cast<double>(n), 1 - e) - 1 / eps));
  f.flipped = static_cast<int64_t>(std::ceil(1 / eps - 1e-12));
  if (f.b_n < 1 || f.b_n + f.flipped > n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "fixture does not fit: b_n=", f.b_n, " flips=", f.flipped, " n=", n));
  }
  if (f.b_n < 2 * k / eps) {
    f.warnings.push_back(
        absl::StrFormat("b_n=%d is below 2k/eps=%.3g", f.b_n, 2 * k / eps));
  }
  f.d0.points.resize(n);
  for (int64_t i = 1; i <= n; ++i) {
    f.d0.points[i - 1] = i <= f.b_n ? 1.0 : static_cast<double>(i);
  }
  f.d1 = f.d0;
  for (int64_t i = f.b_n + 1; i <= f.b_n + f.flipped; ++i) {
    f.d1.points[i - 1] = 1.0;
  }
  f.xi = RatioToDouble(Binomial(f.b_n + f.flipped - 1, k - 1),
                       Binomial(n - 1, k - 1));
  f.gap = RatioToDouble(
      Binomial(f.b_n + f.flipped, k) - Binomial(f.b_n, k), Binomial(n, k));
  f.bound = k / (3.0 * n * eps) * f.xi;
  return f;
}

}  // namespace ustatdp
