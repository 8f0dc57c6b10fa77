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

#include "ustatdp/hajek.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "ustatdp/noise.h"

namespace ustatdp {

int64_t ComputeL(std::span<const double> abs_devs, double xi, double C, int k,
                 int64_t n) {
  std::vector<double> d(abs_devs.begin(), abs_devs.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const double step = 6.0 * k * C / static_cast<double>(n);
  size_t count = d.size();  // violators at the current threshold
  for (int64_t t = 1; t <= n; ++t) {
    const double thr = xi + step * static_cast<double>(t);
    while (count > 0 && !(d[count - 1] > thr)) --count;
    if (static_cast<int64_t>(count) <= t) return t;
  }
  return n;
}

std::vector<double> ComputeWeights(std::span<const double> signed_devs,
                                   double xi, double C, int k, int64_t n,
                                   int64_t L, double eps) {
  const double nn = static_cast<double>(n);
  const double b = xi + 6.0 * k * C * static_cast<double>(L) / nn;
  std::vector<double> w(signed_devs.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const double dist = std::max(0.0, std::fabs(signed_devs[i]) - b);
    if (dist == 0) {
      w[i] = 1;
    } else if (C == 0) {
      w[i] = 0;
    } else {
      w[i] = std::max(0.0, 1 - eps * nn / (6.0 * C * k) * dist);
    }
  }
  return w;
}

double SmoothBoundG(double xi, int64_t L, int64_t n, int k, double C,
                    double eps, bool all_tuples) {
  const double nn = static_cast<double>(n), kk = k;
  const double l = static_cast<double>(L);
  const double m = all_tuples ? 1.0 : std::min(kk, l);
  return kk / nn * (xi + kk * C * l / nn) * (1 + eps * l) +
         kk * kk * C * l * l * m / (nn * nn) * (eps + kk / nn) +
         kk * kk * C / (nn * nn * eps);
}

double SmoothSensitivity(double xi, int64_t L, int64_t n, int k, double C,
                         double eps, bool all_tuples) {
  double best = 0;
  for (int64_t l = 0; l <= n; ++l) {
    const double decay = std::exp(-eps * static_cast<double>(l));
    best = std::max(best,
                    decay * SmoothBoundG(xi, L + l, n, k, C, eps, all_tuples));
    // g grows polynomially, so once decay underflows nothing larger follows.
    if (decay == 0) break;
  }
  return best;
}

absl::StatusOr<HajekState> ComputeHajekState(const TupleStatistic& t,
                                             const HajekParams& p) {
  if (!(p.eps > 0) || !(p.C >= 0) || !(p.xi >= 0) || !std::isfinite(p.C) ||
      !std::isfinite(p.xi) || !std::isfinite(p.eps)) {
    return absl::InvalidArgumentError("need eps > 0, C >= 0, xi >= 0 finite");
  }
  const int64_t n = t.n();
  const int k = t.k();
  HajekState s;
  s.mean = t.Mean();
  s.projections = t.Projections();
  std::vector<double> signed_devs(n), abs_devs(n);
  for (int64_t i = 0; i < n; ++i) {
    signed_devs[i] = s.projections[i] - s.mean;
    abs_devs[i] = std::fabs(signed_devs[i]);
  }
  s.L = ComputeL(abs_devs, p.xi, p.C, k, n);
  const double b = p.xi + 6.0 * k * p.C * static_cast<double>(s.L) /
                              static_cast<double>(n);
  for (int64_t i = 0; i < n; ++i) {
    (abs_devs[i] <= b ? s.good : s.bad).push_back(static_cast<uint32_t>(i));
  }
  s.weights = ComputeWeights(signed_devs, p.xi, p.C, k, n, s.L, p.eps);
  s.reweighted = t.ReweightedMean(s.weights, s.mean);
  s.smooth_bound =
      SmoothSensitivity(p.xi, s.L, n, k, p.C, p.eps, t.all_tuples());
  return s;
}

namespace {

double NoiseRadius(double scale) {
  static const double q = QuarticQuantile(0.995);
  return scale * q;
}

}  // namespace

absl::StatusOr<EstimateReport> PrivateMeanLocalHajek(const TupleStatistic& t,
                                                     const HajekParams& p,
                                                     PrivacyBudget& budget,
                                                     Rng& rng,
                                                     HajekState* state) {
  EstimateReport report;
  const Regularity reg = t.CheckRegularity();
  if (!reg.ok) {
    report.bottom = true;
    report.bottom_reason = reg.reason;
    return report;
  }
  if (auto s = budget.CanSpend(p.eps); !s.ok()) return s;
  auto st = ComputeHajekState(t, p);
  if (!st.ok()) return st.status();
  const double factor = p.strict_alg3_scale ? 1.0 : 10.0;
  auto released = SmoothSensitivityRelease(st->reweighted, st->smooth_bound,
                                           p.eps, budget, rng, factor,
                                           "local hajek release");
  if (!released.ok()) return released.status();
  report.estimate = *released;
  report.noise_scale = factor * st->smooth_bound / p.eps;
  report.radius = NoiseRadius(report.noise_scale);
  report.iterations = 1;
  report.L = st->L;
  report.bad_count = static_cast<int64_t>(st->bad.size());
  if (state) *state = *std::move(st);
  return report;
}

absl::StatusOr<EstimateReport> PrivateMeanLocalHajek(
    const Kernel& h, const Dataset& d, std::shared_ptr<const SubsetFamily> f,
    const HajekParams& p, PrivacyBudget& budget, Rng& rng,
    HajekState* state) {
  auto table = TupleTable::Build(h, d, std::move(f));
  if (!table.ok()) return table.status();
  return PrivateMeanLocalHajek(*table, p, budget, rng, state);
}

double DegenerateXi(double C, int k, int64_t n, double alpha) {
  const double nn = static_cast<double>(n);
  const double lg = std::log(2 * nn / alpha);
  return C * std::sqrt(k / nn * lg) + 8.0 * C * k / (3.0 * nn) * lg;
}

absl::StatusOr<EstimateReport> SubGaussianPipeline(const Kernel& h,
                                                   const Dataset& d,
                                                   const PipelineOptions& o,
                                                   PrivacyBudget& budget,
                                                   Rng& rng) {
  const int k = h.degree();
  const int64_t n = static_cast<int64_t>(d.size());
  if (!(o.alpha > 0 && o.alpha < 1)) {
    return absl::InvalidArgumentError("alpha must be in (0, 1)");
  }
  if (n / 2 < k) {
    return absl::FailedPreconditionError(
        absl::StrCat("need at least ", 2 * k, " points, got ", n));
  }
  if (auto s = budget.CanSpend(o.eps); !s.ok()) return s;
  const Dataset first = d.Slice(0, n / 2);
  const Dataset second = d.Slice(n / 2, n);
  const int64_t n2 = static_cast<int64_t>(second.size());

  CoinPressOptions coarse_opts{o.R, o.tau, o.eps / 2, o.gamma, 1.0};
  auto coarse = NaiveEstimator(h, first, coarse_opts, budget, rng);
  if (!coarse.ok()) return coarse.status();

  const double nn = static_cast<double>(n);
  const double w = o.c * std::sqrt(k * o.tau * std::log(nn / o.alpha));
  const Kernel clipped =
      kernels::Clipped(h, coarse->estimate - w, coarse->estimate + w);
  HajekParams hp;
  hp.eps = o.eps / 2;
  hp.C = 2 * w;
  hp.xi = std::sqrt(2 * o.tau * std::log(2 * static_cast<double>(n2) /
                                         o.alpha));
  hp.strict_alg3_scale = o.strict_alg3_scale;
  auto family = SubsetFamily::AllTuples(n2, k);
  if (!family.ok()) return family.status();
  auto report = PrivateMeanLocalHajek(
      clipped, second, std::make_shared<const SubsetFamily>(*family), hp,
      budget, rng);
  if (!report.ok()) return report.status();
  report->warnings.insert(report->warnings.begin(), coarse->warnings.begin(),
                          coarse->warnings.end());
  if (o.eps < std::sqrt(static_cast<double>(k)) / nn) {
    report->warnings.push_back(
        absl::StrFormat("eps=%g is below sqrt(k)/n; expect poor accuracy",
                        o.eps));
  }
  report->iterations += coarse->iterations;
  return report;
}

}  // namespace ustatdp
