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

#include "ustatdp/harness/experiment.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <thread>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_replace.h"
#include "ustatdp/applications.h"
#include "ustatdp/boosting.h"
#include "ustatdp/estimate.h"
#include "ustatdp/kernel.h"
#include "ustatdp/random.h"

namespace ustatdp {

const char kExperimentHeader[] =
    "cell,trial,method,kernel,distribution,n,eps,alpha,M,seed,theta,estimate,"
    "abs_error,radius,noise_scale,iterations,L,bad,error";

namespace {

struct Scenario {
  Kernel kernel;
  std::function<Dataset(int64_t, Rng&)> sample;
  double theta = 0;
  double tau = 1;
  std::optional<double> C;
  bool collision = false;
  int m = 0;
};

double Param(const ExperimentSpec& s, const std::string& key, double def) {
  auto it = s.params.find(key);
  return it == s.params.end() ? def : it->second;
}

std::function<Dataset(int64_t, Rng&)> GaussianSampler(double mu,
                                                      double sigma) {
  return [mu, sigma](int64_t n, Rng& rng) {
    Dataset d;
    d.points.resize(n);
    for (double& x : d.points) x = mu + sigma * rng.Normal();
    return d;
  };
}

absl::StatusOr<Scenario> MakeScenario(const ExperimentSpec& s) {
  const double mu = Param(s, "mu", 0), sigma = Param(s, "sigma", 1);
  if (s.kernel == "identity" || s.kernel == "pair-mean") {
    if (s.distribution != "gaussian") {
      return absl::InvalidArgumentError(
          absl::StrCat(s.kernel, " pairs with the gaussian distribution"));
    }
    const bool pair = s.kernel == "pair-mean";
    const double tau =
        Param(s, "tau", pair ? sigma * sigma / 2 : sigma * sigma);
    Scenario sc{pair ? kernels::PairMean(tau) : kernels::Identity(tau),
                GaussianSampler(mu, sigma), mu, tau};
    if (s.params.count("C")) sc.C = s.params.at("C");
    return sc;
  }
  if (s.kernel == "collision") {
    if (s.distribution != "two-level") {
      return absl::InvalidArgumentError(
          "collision pairs with the two-level distribution");
    }
    const int m = static_cast<int>(Param(s, "m", 100));
    auto dist = PerturbedUniform::TwoLevel(m, Param(s, "delta", 0));
    if (!dist.ok()) return dist.status();
    auto shared = std::make_shared<const PerturbedUniform>(*dist);
    Scenario sc{kernels::Collision(),
                [shared](int64_t n, Rng& rng) {
                  return SampleMultinomial(*shared, n, rng);
                },
                CollisionTheta(*dist), Param(s, "tau", 0.25)};
    sc.C = Param(s, "C", 1.0);
    sc.collision = true;
    sc.m = m;
    return sc;
  }
  if (s.kernel == "constant") {
    const double v = Param(s, "value", 0.5);
    Scenario sc{kernels::Constant(2, v), GaussianSampler(mu, sigma), v,
                Param(s, "tau", 0.25)};
    sc.C = Param(s, "C", 0.0);
    return sc;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown kernel '", s.kernel, "'"));
}

struct Cell {
  int64_t n;
  double eps;
  double alpha;
  uint64_t m;
};

absl::StatusOr<ChunkEstimator> MakeEstimator(const ExperimentSpec& s,
                                             const Scenario& sc,
                                             const Cell& cell) {
  EstimatorSpec es;
  es.method = s.method;
  es.eps = cell.eps;
  es.R = Param(s, "R", 10);
  es.tau = sc.tau;
  es.M = cell.m;
  es.C = sc.C;
  es.alpha = cell.alpha;
  es.m = sc.m;
  es.c = Param(s, "c", 4);
  es.strict_alg3_scale = s.strict_alg3_scale;
  es.xi_mode = s.xi;
  if (s.xi != "auto" && s.xi != "auto-subgaussian" &&
      s.xi != "auto-degenerate" && s.xi != "auto-uniformity") {
    if (!absl::SimpleAtod(s.xi, &es.xi)) {
      return absl::InvalidArgumentError(absl::StrCat("bad xi '", s.xi, "'"));
    }
    es.xi_mode = "value";
  }
  return MakeChunkEstimator(sc.kernel, es);
}

std::string Num(double v) { return absl::StrFormat("%.17g", v); }

std::string Clean(std::string s) {
  return absl::StrReplaceAll(s, {{",", ";"}, {"\n", " "}, {"\"", "'"}});
}

}  // namespace

absl::Status ValidateExperimentSpec(const ExperimentSpec& s) {
  if (s.n.empty() || s.eps.empty() || s.alpha.empty() || s.M.empty()) {
    return absl::InvalidArgumentError("every grid axis needs a value");
  }
  if (s.trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (s.threads < 1) return absl::InvalidArgumentError("threads must be >= 1");
  for (double e : s.eps) {
    if (!(e > 0)) return absl::InvalidArgumentError("eps must be positive");
  }
  for (double a : s.alpha) {
    if (!(a > 0 && a < 1)) {
      return absl::InvalidArgumentError("alpha must be in (0, 1)");
    }
  }
  auto sc = MakeScenario(s);
  if (!sc.ok()) return sc.status();
  for (int64_t n : s.n) {
    if (n < sc->kernel.degree()) {
      return absl::InvalidArgumentError("n must be at least the kernel degree");
    }
  }
  Cell probe{s.n[0], s.eps[0], s.alpha[0], s.M[0]};
  return MakeEstimator(s, *sc, probe).status();
}

absl::Status RunExperiment(const ExperimentSpec& s, std::ostream& out) {
  if (auto v = ValidateExperimentSpec(s); !v.ok()) return v;
  auto sc = MakeScenario(s);
  if (!sc.ok()) return sc.status();
  std::vector<Cell> cells;
  for (int64_t n : s.n) {
    for (double e : s.eps) {
      for (double a : s.alpha) {
        for (uint64_t m : s.M) cells.push_back({n, e, a, m});
      }
    }
  }
  out << kExperimentHeader << (s.timing ? ",wall_time_ms" : "") << '\n';
  for (size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    auto est = MakeEstimator(s, *sc, cell);
    if (!est.ok()) return est.status();
    std::optional<BoostPlan> plan;
    if (s.boost) {
      auto p = MakeBoostPlan(cell.alpha, cell.n, sc->kernel.degree());
      if (!p.ok()) return p.status();
      plan = *p;
    }
    const uint64_t m_shown =
        s.method == "subsampled"
            ? (cell.m ? cell.m
                      : DefaultSubsampleSize(plan ? plan->chunk_size : cell.n,
                              sc->kernel.degree()))
            : 0;
    std::vector<std::string> rows(s.trials);
    auto run_trial = [&](int64_t t) {
      const uint64_t trial_seed = DeriveSeed(s.seed, c, t);
      Rng data_rng(DeriveSeed(trial_seed, 0));
      const Dataset d = sc->sample(cell.n, data_rng);
      PrivacyBudget budget(cell.eps);
      const auto start = std::chrono::steady_clock::now();
      absl::StatusOr<EstimateReport> r;
      if (plan) {
        r = MedianOfMeans(*est, d, *plan, budget, DeriveSeed(trial_seed, 2));
      } else {
        Rng rng(DeriveSeed(trial_seed, 1));
        r = (*est)(d, budget, rng);
      }
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      std::string row = absl::StrCat(
          c, ",", t, ",", s.method, ",", s.kernel, ",", s.distribution, ",",
          cell.n, ",", Num(cell.eps), ",", Num(cell.alpha), ",", m_shown, ",",
          trial_seed, ",", Num(sc->theta), ",");
      if (!r.ok()) {
        absl::StrAppend(&row, ",,,,,,,", Clean(r.status().ToString()));
      } else if (r->bottom) {
        absl::StrAppend(&row, ",,,,,,,bottom: ", Clean(r->bottom_reason));
      } else {
        absl::StrAppend(&row, Num(r->estimate), ",",
                        Num(std::fabs(r->estimate - sc->theta)), ",",
                        Num(r->radius), ",", Num(r->noise_scale), ",",
                        r->iterations, ",", r->L, ",", r->bad_count, ",");
      }
      if (s.timing) absl::StrAppend(&row, ",", absl::StrFormat("%.3f", ms));
      rows[t] = std::move(row);
    };
    if (s.threads <= 1) {
      for (int64_t t = 0; t < s.trials; ++t) run_trial(t);
    } else {
      std::atomic<int64_t> next{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < s.threads; ++w) {
        pool.emplace_back([&] {
          for (int64_t t; (t = next.fetch_add(1)) < s.trials;) run_trial(t);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (const auto& row : rows) out << row << '\n';
  }
  return out ? absl::OkStatus() : absl::DataLossError("CSV write failed");
}

}  // namespace ustatdp
