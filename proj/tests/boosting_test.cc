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

#include "ustatdp/boosting.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "gtest/gtest.h"
#include "test_util.h"
#include "ustatdp/privacy_budget.h"

namespace ustatdp {
namespace {

// Returns the first point of its chunk and spends eps.
ChunkEstimator FirstPoint(double eps) {
  return [eps](const Dataset& c, PrivacyBudget& b,
               Rng&) -> absl::StatusOr<EstimateReport> {
    if (auto s = b.Spend(eps, "first point"); !s.ok()) return s;
    EstimateReport r;
    r.estimate = c.points[0];
    r.radius = c.points[0] * 2;
    return r;
  };
}

Dataset Range(int n) {
  Dataset d;
  for (int i = 0; i < n; ++i) d.points.push_back(i);
  return d;
}

TEST(MakeBoostPlanTest, ChunkCounts) {
  ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(0.05, 1000, 2));
  // 8 ln 20 = 23.97.
  EXPECT_EQ(p.q, 25);
  EXPECT_EQ(p.chunk_size, 40);
  ASSERT_OK_AND_ASSIGN(BoostPlan one, MakeBoostPlan(1, 7, 2));
  EXPECT_EQ(one.q, 1);
  EXPECT_EQ(one.chunk_size, 7);
  ASSERT_OK_AND_ASSIGN(BoostPlan p7, MakeBoostPlan(0.7, 30, 1));
  EXPECT_EQ(p7.q, 3);
}

TEST(MakeBoostPlanTest, OddAndLargeEnough) {
  for (double a = 0.001; a < 1; a *= 1.3) {
    ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(a, 100000, 2));
    EXPECT_EQ(p.q % 2, 1);
    EXPECT_GE(p.q, 8 * std::log(1 / a) - 1e-9);
    EXPECT_LT(p.q - 2, std::max(1.0, 8 * std::log(1 / a)));
  }
}

TEST(MakeBoostPlanTest, Errors) {
  EXPECT_EQ(MakeBoostPlan(0.05, 49, 2).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_OK(MakeBoostPlan(0.05, 50, 2));
  EXPECT_EQ(MakeBoostPlan(0, 100, 2).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(MakeBoostPlan(1.5, 100, 2).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(MedianOfMeansTest, ThreeChunks) {
  const Dataset d{{1, 9, 3, 9, 2, 9}};
  ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(0.7, 6, 1));
  PrivacyBudget b(1);
  ASSERT_OK_AND_ASSIGN(EstimateReport r,
                       MedianOfMeans(FirstPoint(1), d, p, b, 1));
  EXPECT_EQ(r.estimate, 2);
  EXPECT_EQ(r.radius, 4);
}

TEST(MedianOfMeansTest, ConstantEstimator) {
  const auto est = [](const Dataset&, PrivacyBudget& b,
                      Rng&) -> absl::StatusOr<EstimateReport> {
    if (auto s = b.Spend(0.5, "constant"); !s.ok()) return s;
    EstimateReport r;
    r.estimate = 0.123;
    return r;
  };
  ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(0.01, 500, 2));
  PrivacyBudget b(0.5);
  ASSERT_OK_AND_ASSIGN(EstimateReport r,
                       MedianOfMeans(est, Range(500), p, b, 2));
  EXPECT_EQ(r.estimate, 0.123);
}

TEST(MedianOfMeansTest, BudgetIsMaxNotSum) {
  ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(0.05, 100, 1));
  PrivacyBudget b(1);
  ASSERT_OK(MedianOfMeans(FirstPoint(1), Range(100), p, b, 3).status());
  EXPECT_NEAR(b.spent(), 1, 1e-15);
  ASSERT_EQ(b.ledger().size(), 1u);
  EXPECT_EQ(b.ledger()[0].label, "median of 25 chunks");
  EXPECT_EQ(b.ledger()[0].branches, 25);
}

TEST(MedianOfMeansTest, Determinism) {
  const auto est = [](const Dataset& c, PrivacyBudget& b,
                      Rng& rng) -> absl::StatusOr<EstimateReport> {
    if (auto s = b.Spend(1, "noisy"); !s.ok()) return s;
    EstimateReport r;
    r.estimate = c.points[0] + rng.Normal();
    return r;
  };
  ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(0.1, 60, 1));
  PrivacyBudget b1(1), b2(1), b3(1);
  const double a = MedianOfMeans(est, Range(60), p, b1, 77)->estimate;
  const double c = MedianOfMeans(est, Range(60), p, b2, 77)->estimate;
  const double e = MedianOfMeans(est, Range(60), p, b3, 78)->estimate;
  EXPECT_EQ(a, c);
  EXPECT_NE(a, e);
}

TEST(MedianOfMeansTest, OrderStatistic) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const double alpha = 0.01 + 0.9 * rng.Uniform();
    ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(alpha, 1000, 1));
    Dataset d;
    for (int i = 0; i < 1000; ++i) d.points.push_back(rng.Normal());
    std::vector<double> firsts;
    for (int j = 0; j < p.q; ++j) firsts.push_back(d.points[j * p.chunk_size]);
    std::sort(firsts.begin(), firsts.end());
    PrivacyBudget b(1);
    EXPECT_EQ(MedianOfMeans(FirstPoint(1), d, p, b, 5)->estimate,
              firsts[(p.q + 1) / 2 - 1]);
  }
}

TEST(MedianOfMeansTest, CoverageBoost) {
  // Each chunk is right with probability 3/4.
  const auto est = [](const Dataset&, PrivacyBudget& b,
                      Rng& rng) -> absl::StatusOr<EstimateReport> {
    if (auto s = b.Spend(1, "coin"); !s.ok()) return s;
    EstimateReport r;
    r.estimate = rng.Uniform() < 0.75 ? 0.0 : 100.0;
    return r;
  };
  const double alpha = 0.05;
  ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(alpha, 25, 1));
  const int trials = 10000;
  int ok = 0;
  for (int t = 0; t < trials; ++t) {
    PrivacyBudget b(1);
    ok += std::fabs(MedianOfMeans(est, Range(25), p, b, t)->estimate) <= 1;
  }
  EXPECT_GE(ok, (1 - alpha) * trials);
}

TEST(MedianOfMeansTest, BottomChunks) {
  // Chunks whose first point is negative report bottom.
  const auto est = [](const Dataset& c, PrivacyBudget& b,
                      Rng&) -> absl::StatusOr<EstimateReport> {
    EstimateReport r;
    if (c.points[0] < 0) {
      r.bottom = true;
      r.bottom_reason = "negative";
      return r;
    }
    if (auto s = b.Spend(1, "x"); !s.ok()) return s;
    r.estimate = c.points[0];
    return r;
  };
  ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(0.7, 3, 1));
  PrivacyBudget b(1);
  ASSERT_OK_AND_ASSIGN(EstimateReport r,
                       MedianOfMeans(est, Dataset{{-1, 4, 6}}, p, b, 1));
  EXPECT_FALSE(r.bottom);
  EXPECT_EQ(r.estimate, 5);
  EXPECT_NE(r.warnings.back().find("chunk 1: negative"), std::string::npos);
  PrivacyBudget b2(1);
  ASSERT_OK_AND_ASSIGN(EstimateReport all,
                       MedianOfMeans(est, Dataset{{-1, -4, -6}}, p, b2, 1));
  EXPECT_TRUE(all.bottom);
  EXPECT_EQ(b2.spent(), 0);
}

TEST(MedianOfMeansTest, PropagatesErrors) {
  ASSERT_OK_AND_ASSIGN(BoostPlan p, MakeBoostPlan(0.7, 9, 1));
  PrivacyBudget b(0.5);
  EXPECT_EQ(MedianOfMeans(FirstPoint(1), Range(9), p, b, 1).status().code(),
            absl::StatusCode::kResourceExhausted);
  PrivacyBudget b2(1);
  EXPECT_FALSE(MedianOfMeans(FirstPoint(1), Range(2), p, b2, 1).ok());
}

}  // namespace
}  // namespace ustatdp
