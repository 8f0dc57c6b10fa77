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
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "gtest/gtest.h"
#include "test_util.h"
#include "ustatdp/kernel.h"
#include "ustatdp/random.h"
#include "ustatdp/subset_family.h"
#include "ustatdp/ustat.h"
#include "ustatdp/variance.h"

namespace ustatdp {
namespace {

TailBounds ZeroBounds() {
  return {[](double) { return 0.0; }, [](double) { return 0.0; }};
}

Dataset Gaussian(int n, double mu, double sigma, Rng& rng) {
  Dataset d;
  for (int i = 0; i < n; ++i) d.points.push_back(mu + sigma * rng.Normal());
  return d;
}

TEST(OneStepTest, VanishingNoise) {
  std::vector<double> v = {0.1, 0.4, 0.3, 0.2};
  PrivacyBudget b(1e6);
  Rng rng(1);
  ASSERT_OK_AND_ASSIGN(StepResult r,
                       UStatOneStep(v, 0.25, {0, 1, 0}, 1e6, 0.1,
                                    ZeroBounds(), b, rng));
  EXPECT_NEAR(r.release, 0.25, 1e-3);
  EXPECT_NEAR(0.5 * (r.interval.lo + r.interval.hi), 0.25, 1e-3);
  EXPECT_EQ(r.interval.iteration, 1);
}

TEST(OneStepTest, DeltaPlugIn) {
  const TailBounds tb{[](double) { return 1.0; }, [](double) { return 0.0; }};
  std::vector<double> v = {0.0};
  PrivacyBudget b(1);
  Rng rng(1);
  ASSERT_OK_AND_ASSIGN(StepResult r,
                       UStatOneStep(v, 0.2, {-1, 1, 0}, 1, 0.1, tb, b, rng));
  EXPECT_DOUBLE_EQ(r.delta, 0.8);
  EXPECT_DOUBLE_EQ(r.noise_scale, 0.8);
}

TEST(OneStepTest, ClippingIsBitwiseNoOpInside) {
  Rng rng(3);
  std::vector<double> v(50);
  for (double& x : v) x = rng.Uniform() * 2 - 1;
  const std::vector<double> before = v;
  const TailBounds tb{[](double) { return 0.5; }, [](double) { return 0.1; }};
  PrivacyBudget b(1);
  ASSERT_OK(UStatOneStep(v, 0.02, {-1, 1, 0}, 1, 0.1, tb, b, rng).status());
  EXPECT_EQ(std::memcmp(v.data(), before.data(), v.size() * sizeof(double)),
            0);
}

TEST(OneStepTest, ClipsOutside) {
  std::vector<double> v = {-5, 0, 5};
  PrivacyBudget b(1);
  Rng rng(1);
  const TailBounds tb{[](double) { return 1.0; }, [](double) { return 0.0; }};
  ASSERT_OK(UStatOneStep(v, 0.1, {-1, 1, 0}, 1, 0.1, tb, b, rng).status());
  EXPECT_EQ(v, (std::vector<double>{-2, 0, 2}));
}

TEST(OneStepTest, WidthIdentity) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> v(20);
    for (double& x : v) x = rng.Normal() * 3;
    const double q = rng.Uniform() * 2, qa = rng.Uniform();
    const TailBounds tb{[=](double) { return q; }, [=](double) { return qa; }};
    const IntervalState in{-rng.Uniform() * 10, rng.Uniform() * 10, 0};
    const double beta = 0.01 + 0.5 * rng.Uniform();
    const double eps = 0.1 + rng.Uniform();
    PrivacyBudget b(10);
    ASSERT_OK_AND_ASSIGN(StepResult r,
                         UStatOneStep(v, 0.05, in, eps, beta, tb, b, rng));
    const double width = r.interval.hi - r.interval.lo;
    EXPECT_LE(width, 0.5 * (in.hi - in.lo) +
                         2 * (qa + r.delta / eps * std::log(1 / beta)) + 1e-12);
    EXPECT_NEAR(width, 2 * (qa + r.delta / eps * std::log(1 / beta)), 1e-12);
  }
}

TEST(OneStepTest, CoverageOfOneStep) {
  // Identity kernel on N(theta, 1): theta stays inside with prob >= 1 - 3b.
  const int n = 200, trials = 10000;
  const double theta = 0.7, beta = 0.05;
  const TailBounds tb = AllTuplesTailBounds(1.0, 1, n);
  Rng rng(11);
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> v = Gaussian(n, theta, 1, rng).points;
    PrivacyBudget b(1);
    auto r = UStatOneStep(v, 1.0 / n, {theta - 3, theta + 5, 0}, 0.5, beta,
                          tb, b, rng);
    ASSERT_TRUE(r.ok());
    hits += r->interval.lo <= theta && theta <= r->interval.hi;
  }
  EXPECT_GE(hits, (1 - 3 * beta) * trials);
}

TEST(OneStepTest, RejectsBadInput) {
  std::vector<double> v = {1};
  PrivacyBudget b(1);
  Rng rng(1);
  EXPECT_FALSE(UStatOneStep(v, 1, {1, 0, 0}, 1, 0.1, ZeroBounds(), b, rng).ok());
  EXPECT_FALSE(UStatOneStep(v, 1, {0, 1, 0}, 1, 0, ZeroBounds(), b, rng).ok());
  std::vector<double> none;
  EXPECT_FALSE(
      UStatOneStep(none, 1, {0, 1, 0}, 1, 0.1, ZeroBounds(), b, rng).ok());
}

TEST(UStatMeanTest, ConstantKernelVanishingNoise) {
  const Dataset d{std::vector<double>(30, 0)};
  CoinPressOptions o;
  o.R = 1;
  o.eps = 1e6;
  o.tau = 1;
  PrivacyBudget b(1e6);
  Rng rng(2);
  ASSERT_OK_AND_ASSIGN(
      EstimateReport r,
      AllTuplesEstimator(kernels::Constant(2, 0.37), d, o, b, rng));
  EXPECT_NEAR(r.estimate, 0.37, 1e-3);
}

TEST(UStatMeanTest, LedgerShowsSchedule) {
  Rng rng(3);
  const Dataset d = Gaussian(300, 0, 1, rng);
  CoinPressOptions o;
  o.R = 1000;
  o.eps = 0.8;
  o.tau = 1;
  const TailBounds tb = AllTuplesTailBounds(1, 1, 300);
  const int t = CoinPressSteps(o, tb);
  EXPECT_EQ(t, static_cast<int>(std::ceil(std::log2(1000 / tb.q(0.01)))));
  PrivacyBudget b(0.8);
  ASSERT_OK_AND_ASSIGN(EstimateReport r,
                       AllTuplesEstimator(kernels::Identity(1), d, o, b, rng));
  ASSERT_EQ(static_cast<int>(b.ledger().size()), t + 1);
  for (int i = 0; i < t; ++i) {
    EXPECT_DOUBLE_EQ(b.ledger()[i].epsilon, 0.8 / (2 * t));
    EXPECT_EQ(b.ledger()[i].label, "coinpress step " + std::to_string(i + 1));
  }
  EXPECT_DOUBLE_EQ(b.ledger()[t].epsilon, 0.4);
  EXPECT_NEAR(b.spent(), 0.8, 1e-12);
  EXPECT_EQ(r.iterations, t + 1);
}

TEST(UStatMeanTest, AtLeastOneStep) {
  CoinPressOptions o;
  o.R = 0.01;
  EXPECT_EQ(CoinPressSteps(o, AllTuplesTailBounds(1, 2, 100)), 1);
  o.R = 100;
  o.t_constant = 2;
  const TailBounds tb = AllTuplesTailBounds(1, 2, 100);
  EXPECT_EQ(CoinPressSteps(o, tb),
            static_cast<int>(std::ceil(2 * std::log2(100 / tb.q(0.01)))));
}

// theta in every intermediate interval, replaying the schedule by hand.
TEST(UStatMeanTest, IntervalNesting) {
  const int n = 200, trials = 10000;
  const double theta = -1.3;
  CoinPressOptions o;
  o.R = 10;
  o.eps = 1;
  const TailBounds tb = AllTuplesTailBounds(1, 1, n);
  const int t = CoinPressSteps(o, tb);
  Rng rng(12);
  int ok = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> v = Gaussian(n, theta, 1, rng).points;
    PrivacyBudget b(1);
    IntervalState in{-o.R, o.R, 0};
    bool inside = true;
    for (int i = 0; i <= t; ++i) {
      const bool last = i == t;
      auto r = UStatOneStep(v, 1.0 / n, in, last ? 0.5 : 0.5 / t,
                            last ? o.gamma : o.gamma / t, tb, b, rng);
      ASSERT_TRUE(r.ok());
      in = r->interval;
      inside &= in.lo <= theta && theta <= in.hi;
    }
    ok += inside;
  }
  EXPECT_GE(ok, (1 - 6 * o.gamma) * trials);
}

TEST(UStatMeanTest, BeatsLaplaceOnRange) {
  // k = 1, n = 500: 75th percentile error against clip-to-R plus Laplace.
  const int n = 500, trials = 200;
  const double R = 100;
  CoinPressOptions o;
  o.R = R;
  o.eps = 1;
  o.tau = 1;
  Rng rng(13);
  std::vector<double> cp, lap;
  for (int t = 0; t < trials; ++t) {
    const Dataset d = Gaussian(n, 2.0, 1, rng);
    PrivacyBudget b(1);
    cp.push_back(std::abs(
        AllTuplesEstimator(kernels::Identity(1), d, o, b, rng)->estimate - 2));
    double s = 0;
    for (double x : d.points) s += std::clamp(x, -R, R);
    lap.push_back(std::abs(s / n + rng.Laplace(2 * R / n) - 2));
  }
  std::sort(cp.begin(), cp.end());
  std::sort(lap.begin(), lap.end());
  EXPECT_LT(cp[trials * 3 / 4], lap[trials * 3 / 4]);
}

TEST(UStatMeanTest, WarnsWhenSampleTooSmall) {
  Rng rng(4);
  const Dataset d = Gaussian(20, 0, 1, rng);
  CoinPressOptions o;
  o.R = 10;
  PrivacyBudget b(1);
  ASSERT_OK_AND_ASSIGN(EstimateReport r,
                       AllTuplesEstimator(kernels::PairMean(0.5), d, o, b, rng));
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_NE(r.warnings[0].find("dependence fraction"), std::string::npos);
}

TEST(NaiveEstimatorTest, KEqualsOneIsCoinPressOnRawData) {
  Rng data_rng(5);
  const Dataset d = Gaussian(100, 1, 1, data_rng);
  CoinPressOptions o;
  o.R = 10;
  PrivacyBudget b1(1), b2(1);
  Rng r1(6), r2(6);
  ASSERT_OK_AND_ASSIGN(EstimateReport a,
                       NaiveEstimator(kernels::Identity(1), d, o, b1, r1));
  ASSERT_OK_AND_ASSIGN(EstimateReport c,
                       UStatMean(d.points, 0.01, o, NaiveTailBounds(1, 100),
                                 b2, r2));
  EXPECT_EQ(a.estimate, c.estimate);
}

TEST(NaiveEstimatorTest, DropsRemainder) {
  const Dataset d{{1, 2, 3, 4, 5, 6, 1000}};
  CoinPressOptions o;
  o.R = 10;
  o.tau = 0.5;
  PrivacyBudget b1(1), b2(1);
  Rng r1(7), r2(7);
  ASSERT_OK_AND_ASSIGN(EstimateReport a,
                       NaiveEstimator(kernels::PairMean(0.5), d, o, b1, r1));
  ASSERT_OK_AND_ASSIGN(
      EstimateReport c,
      UStatMean({1.5, 3.5, 5.5}, 1.0 / 3, o, NaiveTailBounds(0.5, 3), b2, r2));
  EXPECT_EQ(a.estimate, c.estimate);
}

TEST(AllTuplesEstimatorTest, UsesDepKOverN) {
  Rng data_rng(8);
  const Dataset d = Gaussian(40, 0, 1, data_rng);
  CoinPressOptions o;
  o.R = 10;
  o.tau = 0.5;
  PrivacyBudget b1(1), b2(1);
  Rng r1(9), r2(9);
  ASSERT_OK_AND_ASSIGN(
      EstimateReport a,
      AllTuplesEstimator(kernels::PairMean(0.5), d, o, b1, r1));
  auto f = std::make_shared<const SubsetFamily>(
      SubsetFamily::AllTuples(40, 2).value());
  EXPECT_EQ(f->dep(), 2.0 / 40);
  auto t = TupleTable::Build(kernels::PairMean(0.5), d, f).value();
  ASSERT_OK_AND_ASSIGN(
      EstimateReport c,
      UStatMean(t.values(), 0.05, o, AllTuplesTailBounds(0.5, 2, 40), b2, r2));
  EXPECT_EQ(a.estimate, c.estimate);
}

TEST(AllTuplesEstimatorTest, NonPrivateErrorTracksVariance) {
  // Pair means of N(0, 1): zeta = (1/4, 1/2), so var(U_n) = 1/n.
  const int n = 100, trials = 500;
  const double sd = std::sqrt(
      VarianceOfUStat(std::vector<double>{0.25, 0.5}, n, 2).value());
  EXPECT_NEAR(sd * sd, 1.0 / n, 1e-15);
  CoinPressOptions o;
  o.R = 10;
  o.eps = 1e6;
  o.tau = 0.5;
  Rng rng(10);
  double mse = 0;
  for (int t = 0; t < trials; ++t) {
    const Dataset d = Gaussian(n, 0, 1, rng);
    PrivacyBudget b(1e6);
    const double e =
        AllTuplesEstimator(kernels::PairMean(0.5), d, o, b, rng)->estimate;
    mse += e * e;
  }
  const double rmse = std::sqrt(mse / trials);
  EXPECT_LE(rmse, 2 * sd);
  EXPECT_GE(rmse, sd / 2);
}

TEST(AllTuplesEstimatorTest, RefusesHugeFamilies) {
  const Dataset d{std::vector<double>(200, 0)};
  const Kernel h5(5, [](std::span<const double>) { return 0.0; },
                  SubGaussian{1});
  CoinPressOptions o;
  PrivacyBudget b(1);
  Rng rng(1);
  EXPECT_EQ(AllTuplesEstimator(h5, d, o, b, rng).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_EQ(b.spent(), 0);
}

TEST(SubsampledEstimatorTest, LargeMApproachesAllTuples) {
  const int n = 100, trials = 200;
  const uint64_t m = 10 * 4950;
  CoinPressOptions o;
  o.R = 10;
  o.eps = 10;
  o.tau = 0.5;
  Rng rng(14);
  double all = 0, sub = 0;
  for (int t = 0; t < trials; ++t) {
    const Dataset d = Gaussian(n, 0, 1, rng);
    PrivacyBudget b1(10), b2(10);
    const double a =
        AllTuplesEstimator(kernels::PairMean(0.5), d, o, b1, rng)->estimate;
    const double s =
        SubsampledEstimator(kernels::PairMean(0.5), d, o, m, b2, rng)
            ->estimate;
    all += a * a;
    sub += s * s;
  }
  EXPECT_LE(std::sqrt(sub / all), 1.2);
}

TEST(SubsampledEstimatorTest, ExtraVarianceTerm) {
  // var = (1 - 1/M) var(U_n) + zeta_2 / M with zeta_2 = 1/2.
  const int n = 100, trials = 2000;
  const uint64_t m = 100;
  const double want = (1 - 1.0 / m) / n + 0.5 / m;
  CoinPressOptions o;
  o.R = 10;
  o.eps = 1e6;
  o.tau = 0.5;
  Rng rng(15);
  std::vector<double> sq(trials);
  for (int t = 0; t < trials; ++t) {
    const Dataset d = Gaussian(n, 0, 1, rng);
    PrivacyBudget b(1e6);
    const double e =
        SubsampledEstimator(kernels::PairMean(0.5), d, o, m, b, rng)->estimate;
    sq[t] = e * e;
  }
  const auto mv = testing::Moments(sq);
  EXPECT_LE(std::abs(mv.mean - want), 3 * std::sqrt(mv.var / trials))
      << mv.mean << " vs " << want;
}

TEST(SubsampledEstimatorTest, DepBelowFourKOverN) {
  const int n = 100, k = 2;
  const auto m = static_cast<uint64_t>(std::ceil(5.0 * n / k * std::log(n)));
  int ok = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    ok += SubsetFamily::Subsample(n, k, m, seed)->dep() <= 4.0 * k / n;
  }
  EXPECT_GE(ok, 99);
}

TEST(SubsampledEstimatorTest, WarnsOnSmallM) {
  Rng rng(16);
  const Dataset d = Gaussian(100, 0, 1, rng);
  CoinPressOptions o;
  o.R = 10;
  o.tau = 0.5;
  PrivacyBudget b(1);
  ASSERT_OK_AND_ASSIGN(
      EstimateReport r,
      SubsampledEstimator(kernels::PairMean(0.5), d, o, 50, b, rng));
  EXPECT_NE(r.warnings.back().find("below (n/k) log n"), std::string::npos);
}

TEST(BudgetExactnessTest, EveryEstimatorDebitsEps) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const int n = 30 + static_cast<int>(rng.UniformInt(100));
    const double eps = 0.1 + 2 * rng.Uniform();
    const Dataset d = Gaussian(n, rng.Normal(), 1 + rng.Uniform(), rng);
    CoinPressOptions o;
    o.R = 1 + 100 * rng.Uniform();
    o.eps = eps;
    o.tau = 1;
    PrivacyBudget b1(eps), b2(eps), b3(eps);
    ASSERT_OK(NaiveEstimator(kernels::PairMean(1), d, o, b1, rng).status());
    ASSERT_OK(AllTuplesEstimator(kernels::PairMean(1), d, o, b2, rng).status());
    ASSERT_OK(
        SubsampledEstimator(kernels::PairMean(1), d, o, 500, b3, rng).status());
    EXPECT_NEAR(b1.spent(), eps, 1e-12 * eps);
    EXPECT_NEAR(b2.spent(), eps, 1e-12 * eps);
    EXPECT_NEAR(b3.spent(), eps, 1e-12 * eps);
  }
}

TEST(BudgetExactnessTest, InsufficientBudgetSpendsNothing) {
  const Dataset d{{1, 2, 3, 4}};
  CoinPressOptions o;
  o.eps = 1;
  PrivacyBudget b(0.5);
  Rng rng(1);
  EXPECT_EQ(AllTuplesEstimator(kernels::PairMean(1), d, o, b, rng)
                .status()
                .code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_TRUE(b.ledger().empty());
}

}  // namespace
}  // namespace ustatdp
