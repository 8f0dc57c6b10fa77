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

#include "ustatdp/applications.h"

#include <array>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "gtest/gtest.h"
#include "test_util.h"
#include "ustatdp/random.h"
#include "ustatdp/ustat.h"

namespace ustatdp {
namespace {

TEST(PerturbedUniformTest, Validation) {
  EXPECT_FALSE(PerturbedUniform::Make({0.5}).ok());
  EXPECT_FALSE(PerturbedUniform::Make({1.5, -1.5}).ok());
  EXPECT_FALSE(PerturbedUniform::Make({0.5, 0.1}).ok());
  ASSERT_OK_AND_ASSIGN(PerturbedUniform p, PerturbedUniform::Make({0.5, -0.5}));
  EXPECT_EQ(p.probs, (std::vector<double>{0.75, 0.25}));
}

TEST(PerturbedUniformTest, TwoLevel) {
  ASSERT_OK_AND_ASSIGN(PerturbedUniform p, PerturbedUniform::TwoLevel(5, 0.4));
  EXPECT_EQ(p.a, (std::vector<double>{0.4, 0.4, 0, -0.4, -0.4}));
  double s = 0;
  for (double v : p.probs) s += v;
  EXPECT_NEAR(s, 1, 1e-15);
  ASSERT_OK_AND_ASSIGN(PerturbedUniform q, ParsePerturbation("two-level:0.4", 5));
  EXPECT_EQ(q.a, p.a);
  ASSERT_OK_AND_ASSIGN(PerturbedUniform u, ParsePerturbation("uniform", 7));
  EXPECT_EQ(u.m, 7);
  ASSERT_OK_AND_ASSIGN(PerturbedUniform l,
                       ParsePerturbation("0.2,-0.1,-0.1", 0));
  EXPECT_EQ(l.m, 3);
  EXPECT_FALSE(ParsePerturbation("two-level:x", 4).ok());
}

TEST(SampleMultinomialTest, UniformFrequencies) {
  const int m = 20, n = 10000;
  const PerturbedUniform u = PerturbedUniform::Uniform(m);
  int ok = 0, total = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Dataset d = SampleMultinomial(u, n, rng);
    std::vector<int> c(m + 1, 0);
    for (double x : d.points) ++c[static_cast<int>(x)];
    for (int i = 1; i <= m; ++i) {
      const double p = 1.0 / m;
      ok += std::fabs(c[i] / double(n) - p) <= 3 * std::sqrt(p * (1 - p) / n);
      ++total;
    }
  }
  EXPECT_GE(ok, 0.99 * total);
}

TEST(SampleMultinomialTest, PointMass) {
  ASSERT_OK_AND_ASSIGN(PerturbedUniform p, PerturbedUniform::Make({1, -1}));
  Rng rng(1);
  for (double x : SampleMultinomial(p, 1000, rng).points) EXPECT_EQ(x, 1);
}

TEST(SampleMultinomialTest, Golden) {
  Rng rng(12345);
  EXPECT_EQ(SampleMultinomial(PerturbedUniform::Uniform(10), 12, rng).points,
            (std::vector<double>{4, 5, 7, 6, 6, 3, 1, 7, 5, 3, 1, 1}));
}

TEST(CollisionThetaTest, Values) {
  for (int m : {2, 3, 50, 1000}) {
    EXPECT_EQ(CollisionTheta(PerturbedUniform::Uniform(m)), 1.0 / m);
  }
  EXPECT_EQ(CollisionTheta(PerturbedUniform::Make({1, -1}).value()), 1);
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const int m = 2 + static_cast<int>(rng.UniformInt(30));
    const double delta = rng.Uniform();
    const PerturbedUniform p = PerturbedUniform::TwoLevel(m, delta).value();
    double sq = 0, a2 = 0;
    for (double v : p.probs) sq += v * v;
    for (double v : p.a) a2 += v * v;
    EXPECT_NEAR(CollisionTheta(p), sq, 1e-15);
    if (a2 / m >= delta * delta) {
      EXPECT_GE(CollisionTheta(p), (1 + delta * delta) / m - 1e-15);
    }
  }
}

TEST(UniformityTest, Constants) {
  EXPECT_NEAR(UniformityXi(50, 1000, 0.01),
              6.0 / 50 + 8 * std::log(4e5) / 1000, 1e-15);
  EXPECT_NEAR(UniformityThreshold(50, 0.5), (1 + 0.1875) / 50, 1e-15);
}

TEST(UniformityTest, Errors) {
  PrivacyBudget b(10);
  Rng rng(3);
  EXPECT_EQ(UniformityTest(Dataset{{1}}, 5, 0.5, 1, b, rng).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(
      UniformityTest(Dataset{{1, 6}}, 5, 0.5, 1, b, rng).status().code(),
      absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(
      UniformityTest(Dataset{{1, 2}}, 5, 1.0, 1, b, rng).status().code(),
      absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(b.spent(), 0);
}

TEST(UniformityTest, FastPathMatchesPairEnumeration) {
  Rng data_rng(4);
  const Dataset d =
      SampleMultinomial(PerturbedUniform::Uniform(6), 80, data_rng);
  UniformityOptions slow;
  slow.pair_fast_path = false;
  PrivacyBudget b1(1), b2(1);
  Rng r1(5), r2(5);
  ASSERT_OK_AND_ASSIGN(EstimateReport a,
                       PrivateCollisionEstimate(d, 6, 1, b1, r1));
  ASSERT_OK_AND_ASSIGN(EstimateReport c,
                       PrivateCollisionEstimate(d, 6, 1, b2, r2, slow));
  EXPECT_NEAR(a.estimate, c.estimate, 1e-12);
  EXPECT_NEAR(a.noise_scale, c.noise_scale, 1e-15);
}

TEST(UniformityTest, XiValidity) {
  // Uniform p with n >= 16/gamma.
  const int m = 50, n = 1600, trials = 1000;
  const double gamma = 0.01;
  const double xi = UniformityXi(m, n, gamma);
  const PerturbedUniform u = PerturbedUniform::Uniform(m);
  Rng rng(6);
  int ok = 0;
  for (int t = 0; t < trials; ++t) {
    const Dataset d = SampleMultinomial(u, n, rng);
    std::vector<double> c(m + 1, 0);
    for (double x : d.points) ++c[static_cast<int>(x)];
    double pairs = 0;
    for (double v : c) pairs += v * (v - 1) / 2;
    const double un = pairs / (n * (n - 1.0) / 2);
    double worst = 0;
    for (int i = 1; i <= m; ++i) {
      if (c[i] > 0) {
        worst = std::max(worst, std::fabs((c[i] - 1) / (n - 1.0) - un));
      }
    }
    ok += worst <= xi;
  }
  EXPECT_GE(ok, (1 - gamma) * trials);
}

TEST(UniformityTest, SeparatesAtLargeN) {
  const int m = 50, n = 20000, trials = 50;
  const PerturbedUniform null = PerturbedUniform::Uniform(m);
  const PerturbedUniform alt = PerturbedUniform::TwoLevel(m, 0.5).value();
  Rng rng(7);
  int type1 = 0, type2 = 0;
  for (int t = 0; t < trials; ++t) {
    PrivacyBudget b1(1), b2(1);
    type1 += UniformityTest(SampleMultinomial(null, n, rng), m, 0.5, 1, b1,
                            rng)
                 ->reject;
    type2 += !UniformityTest(SampleMultinomial(alt, n, rng), m, 0.5, 1, b2,
                             rng)
                  ->reject;
  }
  EXPECT_LE(type1, 5);
  EXPECT_LE(type2, 5);
}

TEST(RggTest, Invariants) {
  Rng rng(8);
  ASSERT_OK_AND_ASSIGN(GeometricGraph g, SampleRgg(60, 0.7, rng));
  for (int64_t i = 0; i < g.n; ++i) {
    EXPECT_FALSE(g.edge(i, i));
    const auto& x = g.latent[i];
    EXPECT_NEAR(x[0] * x[0] + x[1] * x[1] + x[2] * x[2], 1, 1e-12);
    for (int64_t j = 0; j < g.n; ++j) {
      EXPECT_EQ(g.edge(i, j), g.edge(j, i));
      if (i == j) continue;
      double d2 = 0;
      for (int c = 0; c < 3; ++c) {
        d2 += (g.latent[i][c] - g.latent[j][c]) *
              (g.latent[i][c] - g.latent[j][c]);
      }
      EXPECT_EQ(g.edge(i, j), std::sqrt(d2) <= 0.7);
    }
  }
}

TEST(RggTest, DiameterGivesCompleteGraph) {
  Rng rng(9);
  ASSERT_OK_AND_ASSIGN(GeometricGraph g, SampleRgg(40, 2, rng));
  EXPECT_EQ(g.EdgeCount(), 40 * 39 / 2);
  EXPECT_EQ(EdgeDensity(g), 1);
}

TEST(RggTest, EdgeDensityIsQuarterRSquared) {
  // Edge indicators are pairwise uncorrelated on the sphere.
  const double r = 0.5, p = r * r / 4;
  Rng rng(10);
  ASSERT_OK_AND_ASSIGN(GeometricGraph g, SampleRgg(450, r, rng));
  const double pairs = 450 * 449 / 2.0;
  EXPECT_NEAR(EdgeDensity(g), p, 3 * std::sqrt(p * (1 - p) / pairs));
}

TEST(RggTest, BadArguments) {
  Rng rng(1);
  EXPECT_FALSE(SampleRgg(2, 0.5, rng).ok());
  EXPECT_FALSE(SampleRgg(10, 0, rng).ok());
  EXPECT_FALSE(SampleRgg(10, 2.5, rng).ok());
}

TEST(RggTest, EdgeDensityConcentrates) {
  const double r = 0.15;
  auto freq = [&](int n) {
    Rng rng(11 + n);
    int in = 0;
    for (int t = 0; t < 200; ++t) {
      const double u = EdgeDensity(SampleRgg(n, r, rng).value());
      in += u >= r * r / 8 && u <= 3 * r * r / 8;
    }
    return in / 200.0;
  };
  const double f100 = freq(100), f400 = freq(400);
  EXPECT_GE(f400, f100);
  EXPECT_GE(f400, 0.99);
}

TEST(GraphIoTest, EdgesAndFiles) {
  ASSERT_OK_AND_ASSIGN(GeometricGraph g,
                       GraphFromEdges(4, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(g.EdgeCount(), 3);
  EXPECT_TRUE(g.edge(2, 0));
  EXPECT_FALSE(g.edge(3, 0));
  EXPECT_FALSE(GraphFromEdges(4, {{0, 0}}).ok());
  EXPECT_FALSE(GraphFromEdges(4, {{0, 4}}).ok());

  const std::string path = ::testing::TempDir() + "/edges.txt";
  std::ofstream(path) << "1 2\n2 3\n1 3\n3 5\n";
  ASSERT_OK_AND_ASSIGN(GeometricGraph r, ReadEdgeList(path));
  EXPECT_EQ(r.n, 5);
  EXPECT_EQ(r.EdgeCount(), 4);
  EXPECT_TRUE(r.edge(2, 4));
  ASSERT_OK_AND_ASSIGN(GeometricGraph r8, ReadEdgeList(path, 8));
  EXPECT_EQ(r8.n, 8);
  EXPECT_EQ(ReadEdgeList(path + ".missing").status().code(),
            absl::StatusCode::kNotFound);
  std::ofstream(path) << "1 x\n";
  EXPECT_EQ(ReadEdgeList(path).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(GraphIoTest, InducedSubgraph) {
  ASSERT_OK_AND_ASSIGN(GeometricGraph g,
                       GraphFromEdges(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}}));
  const GeometricGraph s = InducedSubgraph(g, 2, 5);
  EXPECT_EQ(s.n, 3);
  EXPECT_EQ(s.EdgeCount(), 3);
  EXPECT_EQ(EdgeDensity(s), 1);
}

TEST(TriangleTest, KernelCountsTriangles) {
  Rng rng(12);
  ASSERT_OK_AND_ASSIGN(GeometricGraph g, SampleRgg(25, 0.8, rng));
  const Kernel h = TriangleKernel(g);
  int64_t tri = 0, via = 0;
  for (int i = 0; i < 25; ++i) {
    for (int j = i + 1; j < 25; ++j) {
      for (int k = j + 1; k < 25; ++k) {
        tri += g.edge(i, j) && g.edge(j, k) && g.edge(i, k);
        const double v[3] = {double(i), double(j), double(k)};
        via += h(v) == 1;
      }
    }
  }
  EXPECT_EQ(tri, via);
  EXPECT_GT(tri, 0);
}

TEST(TriangleTest, Xi) {
  const double lg = std::log(2 * 300 / 0.01);
  EXPECT_NEAR(TriangleXi(0.02, 300, 0.01),
              18 * 0.02 * std::sqrt(2.0 / 300 * lg) + 16.0 / 900 * lg +
                  9 * 0.02 / 300 * std::sqrt(200.0),
              1e-15);
}

TEST(TriangleTest, ProjectionVarianceVanishes) {
  // E[g | X_1] is constant by rotation invariance, so zeta_1 = 0.
  const double r = 0.8;
  const int trials = 200000;
  Rng rng(13);
  auto point = [&] {
    std::array<double, 3> x;
    double s = 0;
    for (double& c : x) s += (c = rng.Normal()) * c;
    for (double& c : x) c /= std::sqrt(s);
    return x;
  };
  auto near = [&](const std::array<double, 3>& a,
                  const std::array<double, 3>& b) {
    double d = 0;
    for (int c = 0; c < 3; ++c) d += (a[c] - b[c]) * (a[c] - b[c]);
    return d <= r * r;
  };
  auto tri = [&](const auto& a, const auto& b, const auto& c) {
    return near(a, b) && near(b, c) && near(a, c) ? 1.0 : 0.0;
  };
  std::vector<double> diff(trials);
  for (int t = 0; t < trials; ++t) {
    const auto x1 = point(), x2 = point(), x3 = point(), x4 = point(),
               x5 = point();
    const auto y1 = point(), y2 = point(), y3 = point(), y4 = point(),
               y5 = point(), y6 = point();
    diff[t] = tri(x1, x2, x3) * tri(x1, x4, x5) - tri(y1, y2, y3) *
                                                      tri(y4, y5, y6);
  }
  const auto mv = testing::Moments(diff);
  EXPECT_LE(std::fabs(mv.mean), 3 * std::sqrt(mv.var / trials));
}

TEST(TriangleTest, CompleteGraph) {
  Rng rng(14);
  ASSERT_OK_AND_ASSIGN(GeometricGraph g, SampleRgg(30, 2, rng));
  PrivacyBudget b(2);
  ASSERT_OK_AND_ASSIGN(EstimateReport r, PrivateTriangleDensity(g, 1, b, rng));
  ASSERT_FALSE(r.bottom);
  EXPECT_NEAR(r.estimate, 1, 5 * r.noise_scale);
  EXPECT_NEAR(b.spent(), 2, 1e-12);
  ASSERT_EQ(b.ledger().size(), 2u);
  EXPECT_EQ(b.ledger()[0].label, "edge density release");
  EXPECT_EQ(b.ledger()[1].label, "local hajek release");
}

TEST(TriangleTest, BottomFrequencyMatchesLaplaceTail) {
  // One edge among 20 nodes: P(bottom) = exp(-U' n eps / 2) / 2.
  ASSERT_OK_AND_ASSIGN(GeometricGraph g, GraphFromEdges(20, {{3, 7}}));
  const double u = 1.0 / 190;
  const double p = 0.5 * std::exp(-u * 20 / 2);
  const int trials = 4000;
  Rng rng(15);
  int bottoms = 0;
  for (int t = 0; t < trials; ++t) {
    PrivacyBudget b(2);
    auto r = PrivateTriangleDensity(g, 1, b, rng);
    ASSERT_TRUE(r.ok());
    if (r->bottom) {
      ++bottoms;
      EXPECT_NEAR(b.spent(), 1, 1e-12);
    }
  }
  EXPECT_NEAR(bottoms / double(trials), p,
              3 * std::sqrt(p * (1 - p) / trials));
}

TEST(TriangleTest, EmptyGraphBottomsHalfTheTime) {
  ASSERT_OK_AND_ASSIGN(GeometricGraph g, GraphFromEdges(10, {}));
  const int trials = 4000;
  Rng rng(16);
  int bottoms = 0;
  for (int t = 0; t < trials; ++t) {
    PrivacyBudget b(2);
    auto r = PrivateTriangleDensity(g, 1, b, rng);
    ASSERT_TRUE(r.ok());
    bottoms += r->bottom;
    if (!r->bottom) EXPECT_NEAR(r->estimate, 0, 50 * r->noise_scale + 1e-12);
  }
  EXPECT_NEAR(bottoms / double(trials), 0.5, 3 * std::sqrt(0.25 / trials));
}

}  // namespace
}  // namespace ustatdp
