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

#include "ustatdp/coinpress.h"

#include <algorithm>
#include <cmath>
#include <memory>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "ustatdp/ustat.h"

namespace ustatdp {

TailBounds NaiveTailBounds(double tau, int64_t m) {
  const double mm = static_cast<double>(m);
  return {
      [=](double b) { return std::sqrt(2 * tau * std::log(2 * mm / b)); },
      [=](double b) { return std::sqrt(2 * tau * std::log(2 / b) / mm); }};
}

TailBounds AllTuplesTailBounds(double tau, int k, int64_t n) {
  const double nn = static_cast<double>(n);
  return {
      [=](double b) { return std::sqrt(2 * tau * k * std::log(2 * nn / b)); },
      [=](double b) { return std::sqrt(2 * tau * k * std::log(2 / b) / nn); }};
}

TailBounds SubsampledTailBounds(double tau, int k, int64_t n, uint64_t m) {
  const double nn = static_cast<double>(n);
  const double lo = std::min(static_cast<double>(m), nn);
  return {
      [=](double b) { return std::sqrt(2 * tau * k * std::log(4 * nn / b)); },
      [=](double b) {
        return 4 * std::sqrt(tau * k / lo * std::log(4 * nn / b));
      }};
}

absl::StatusOr<StepResult> UStatOneStep(std::span<double> values, double dep,
                                        const IntervalState& in,
                                        double eps_step, double beta,
                                        const TailBounds& tb,
                                        PrivacyBudget& budget, Rng& rng) {
  if (values.empty()) return absl::InvalidArgumentError("no values");
  if (!(in.lo <= in.hi)) return absl::InvalidArgumentError("empty interval");
  if (!(beta > 0 && beta <= 1)) {
    return absl::InvalidArgumentError("beta must be in (0, 1]");
  }
  const double q = tb.q(beta);
  const double lo = in.lo - q, hi = in.hi + q;
  const double delta = dep * (in.hi - in.lo + 2 * q);
  if (auto s = budget.Spend(eps_step,
                            absl::StrCat("coinpress step ", in.iteration + 1));
      !s.ok()) {
    return s;
  }
  double sum = 0;
  for (double& v : values) {
    v = std::clamp(v, lo, hi);
    sum += v;
  }
  const double scale = delta / eps_step;
  const double z = sum / static_cast<double>(values.size()) +
                   (scale > 0 ? rng.Laplace(scale) : 0.0);
  const double half = tb.q_avg(beta) + scale * std::log(1 / beta);
  return StepResult{{z - half, z + half, in.iteration + 1}, z, delta, scale};
}

int CoinPressSteps(const CoinPressOptions& o, const TailBounds& tb) {
  const double raw = o.t_constant * std::log2(o.R / tb.q(o.gamma));
  return std::max(1, static_cast<int>(std::ceil(raw)));
}

absl::StatusOr<EstimateReport> UStatMean(std::vector<double> values,
                                         double dep, const CoinPressOptions& o,
                                         const TailBounds& tb,
                                         PrivacyBudget& budget, Rng& rng) {
  if (!(o.R > 0) || !(o.eps > 0) || !(o.gamma > 0 && o.gamma < 1)) {
    return absl::InvalidArgumentError("need R > 0, eps > 0, gamma in (0,1)");
  }
  if (auto s = budget.CanSpend(o.eps); !s.ok()) return s;
  EstimateReport report;
  const int t = CoinPressSteps(o, tb);
  const double beta = o.gamma / t;
  const double limit = tb.q(o.gamma) * o.eps /
                       (10 * t * tb.q(beta) * std::log(t / o.gamma));
  if (dep > limit) {
    report.warnings.push_back(absl::StrFormat(
        "dependence fraction %.4g exceeds %.4g; accuracy guarantee void", dep,
        limit));
  }
  if (!(tb.q_avg(beta) < tb.q(o.gamma))) {
    report.warnings.push_back(
        "average deviation bound not below the uniform bound; accuracy "
        "guarantee void");
  }
  IntervalState interval{-o.R, o.R, 0};
  for (int i = 0; i < t; ++i) {
    auto step =
        UStatOneStep(values, dep, interval, o.eps / (2 * t), beta, tb, budget,
                     rng);
    if (!step.ok()) return step.status();
    interval = step->interval;
  }
  auto last =
      UStatOneStep(values, dep, interval, o.eps / 2, o.gamma, tb, budget, rng);
  if (!last.ok()) return last.status();
  report.estimate = 0.5 * (last->interval.lo + last->interval.hi);
  report.radius = 0.5 * (last->interval.hi - last->interval.lo);
  report.noise_scale = last->noise_scale;
  report.iterations = t + 1;
  return report;
}

namespace {

absl::StatusOr<EstimateReport> RunOnFamily(const Kernel& h, const Dataset& d,
                                           const SubsetFamily& family,
                                           const CoinPressOptions& o,
                                           const TailBounds& tb,
                                           PrivacyBudget& budget, Rng& rng) {
  auto shared = std::make_shared<const SubsetFamily>(family);
  auto table = TupleTable::Build(h, d, shared);
  if (!table.ok()) return table.status();
  return UStatMean(table->values(), family.dep(), o, tb, budget, rng);
}

absl::Status CheckTau(const CoinPressOptions& o) {
  if (!(o.tau > 0)) return absl::InvalidArgumentError("tau must be positive");
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<EstimateReport> NaiveEstimator(const Kernel& h,
                                              const Dataset& d,
                                              const CoinPressOptions& o,
                                              PrivacyBudget& budget,
                                              Rng& rng) {
  if (auto s = CheckTau(o); !s.ok()) return s;
  auto f = SubsetFamily::DisjointChunks(d.size(), h.degree());
  if (!f.ok()) return f.status();
  return RunOnFamily(h, d, *f, o, NaiveTailBounds(o.tau, f->size()), budget,
                     rng);
}

absl::StatusOr<EstimateReport> AllTuplesEstimator(const Kernel& h,
                                                  const Dataset& d,
                                                  const CoinPressOptions& o,
                                                  PrivacyBudget& budget,
                                                  Rng& rng) {
  if (auto s = CheckTau(o); !s.ok()) return s;
  auto f = SubsetFamily::AllTuples(d.size(), h.degree());
  if (!f.ok()) return f.status();
  return RunOnFamily(h, d, *f, o,
                     AllTuplesTailBounds(o.tau, h.degree(), d.size()), budget,
                     rng);
}

absl::StatusOr<EstimateReport> SubsampledEstimator(const Kernel& h,
                                                   const Dataset& d,
                                                   const CoinPressOptions& o,
                                                   uint64_t m,
                                                   PrivacyBudget& budget,
                                                   Rng& rng) {
  if (auto s = CheckTau(o); !s.ok()) return s;
  auto f = SubsetFamily::Subsample(d.size(), h.degree(), m, rng.NextU64());
  if (!f.ok()) return f.status();
  auto r = RunOnFamily(h, d, *f, o,
                       SubsampledTailBounds(o.tau, h.degree(), d.size(), m),
                       budget, rng);
  const double n = static_cast<double>(d.size());
  if (r.ok() && static_cast<double>(m) < n / h.degree() * std::log(n)) {
    r->warnings.push_back(
        absl::StrFormat("M=%d is below (n/k) log n = %.1f", m,
                        n / h.degree() * std::log(n)));
  }
  return r;
}

}  // namespace ustatdp
