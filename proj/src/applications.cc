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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "ustatdp/noise.h"
#include "ustatdp/ustat.h"

namespace ustatdp {

absl::StatusOr<PerturbedUniform> PerturbedUniform::Make(std::vector<double> a) {
  if (a.size() < 2) return absl::InvalidArgumentError("need m >= 2 atoms");
  double sum = 0;
  for (double v : a) {
    if (!(v >= -1 && v <= 1)) {
      return absl::InvalidArgumentError("perturbations must lie in [-1, 1]");
    }
    sum += v;
  }
  if (std::fabs(sum) > 1e-9) {
    return absl::InvalidArgumentError(
        absl::StrCat("perturbations must sum to 0, got ", sum));
  }
  PerturbedUniform d;
  d.m = static_cast<int>(a.size());
  d.probs.resize(d.m);
  for (int i = 0; i < d.m; ++i) d.probs[i] = (1 + a[i]) / d.m;
  d.a = std::move(a);
  return d;
}

PerturbedUniform PerturbedUniform::Uniform(int m) {
  return *Make(std::vector<double>(std::max(m, 2), 0.0));
}

absl::StatusOr<PerturbedUniform> PerturbedUniform::TwoLevel(int m,
                                                            double delta) {
  if (m < 2) return absl::InvalidArgumentError("need m >= 2 atoms");
  std::vector<double> a(m, 0.0);
  const int half = m / 2;
  for (int i = 0; i < half; ++i) {
    a[i] = delta;
    a[m - 1 - i] = -delta;
  }
  return Make(std::move(a));
}

absl::StatusOr<PerturbedUniform> ParsePerturbation(const std::string& spec,
                                                   int m) {
  if (spec == "uniform") {
    if (m < 2) return absl::InvalidArgumentError("need m >= 2 atoms");
    return PerturbedUniform::Uniform(m);
  }
  if (absl::StartsWith(spec, "two-level:")) {
    double delta;
    if (!absl::SimpleAtod(spec.substr(10), &delta)) {
      return absl::InvalidArgumentError("bad two-level delta");
    }
    return PerturbedUniform::TwoLevel(m, delta);
  }
  std::vector<double> a;
  for (absl::string_view tok : absl::StrSplit(spec, ',')) {
    double v;
    if (!absl::SimpleAtod(tok, &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad perturbation entry '", std::string(tok), "'"));
    }
    a.push_back(v);
  }
  if (m > 0 && static_cast<int>(a.size()) != m) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", m, " perturbations, got ", a.size()));
  }
  return PerturbedUniform::Make(std::move(a));
}

Dataset SampleMultinomial(const PerturbedUniform& dist, int64_t n, Rng& rng) {
  std::vector<double> cdf(dist.m);
  double acc = 0;
  for (int i = 0; i < dist.m; ++i) cdf[i] = acc += dist.probs[i];
  Dataset d;
  d.points.resize(n);
  for (int64_t j = 0; j < n; ++j) {
    const double u = rng.Uniform() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = std::min<ptrdiff_t>(it - cdf.begin(), dist.m - 1);
    d.points[j] = static_cast<double>(idx + 1);
  }
  return d;
}

double CollisionTheta(const PerturbedUniform& dist) {
  double a2 = 0;
  for (double v : dist.a) a2 += v * v;
  const double m = dist.m;
  return 1 / m + a2 / (m * m);
}

double UniformityXi(int m, int64_t n, double gamma) {
  const double nn = static_cast<double>(n);
  return 6.0 / m + 8 * std::log(4 * nn / gamma) / nn;
}

double UniformityThreshold(int m, double delta) {
  return (1 + 0.75 * delta * delta) / m;
}

absl::StatusOr<EstimateReport> PrivateCollisionEstimate(
    const Dataset& data, int m, double eps, PrivacyBudget& budget, Rng& rng,
    const UniformityOptions& o) {
  if (m < 2) return absl::InvalidArgumentError("need m >= 2");
  if (data.size() < 2) {
    return absl::FailedPreconditionError(
        "uniformity test needs at least two samples");
  }
  for (double v : data.points) {
    if (v < 1 || v > m || v != std::floor(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("category ", v, " is not in 1..", m));
    }
  }
  const int64_t n = static_cast<int64_t>(data.size());
  HajekParams p;
  p.eps = eps;
  p.C = 1;
  p.xi = UniformityXi(m, n, o.gamma);
  p.strict_alg3_scale = o.strict_alg3_scale;
  if (o.pair_fast_path) {
    auto stat = CollisionPairs::Build(data);
    if (!stat.ok()) return stat.status();
    return PrivateMeanLocalHajek(*stat, p, budget, rng);
  }
  auto family = SubsetFamily::AllTuples(n, 2);
  if (!family.ok()) return family.status();
  return PrivateMeanLocalHajek(kernels::Collision(), data,
                               std::make_shared<const SubsetFamily>(*family),
                               p, budget, rng);
}

absl::StatusOr<UniformityDecision> UniformityTest(
    const Dataset& data, int m, double delta, double eps,
    PrivacyBudget& budget, Rng& rng, const UniformityOptions& o) {
  if (!(delta > 0 && delta < 1)) {
    return absl::InvalidArgumentError("delta must be in (0, 1)");
  }
  auto r = PrivateCollisionEstimate(data, m, eps, budget, rng, o);
  if (!r.ok()) return r.status();
  UniformityDecision d;
  d.threshold = UniformityThreshold(m, delta);
  d.reject = !r->bottom && r->estimate >= d.threshold;
  d.report = *std::move(r);
  return d;
}

int64_t GeometricGraph::EdgeCount() const {
  int64_t c = 0;
  for (int64_t i = 0; i < n; ++i) {
    for (int64_t j = i + 1; j < n; ++j) c += edge(i, j);
  }
  return c;
}

absl::StatusOr<GeometricGraph> SampleRgg(int64_t n, double r, Rng& rng) {
  if (n < 3) return absl::InvalidArgumentError("need n >= 3 nodes");
  if (!(r > 0 && r <= 2)) {
    return absl::InvalidArgumentError("radius must be in (0, 2]");
  }
  GeometricGraph g;
  g.n = n;
  g.r = r;
  g.latent.resize(n);
  for (auto& x : g.latent) {
    double norm;
    do {
      for (double& c : x) c = rng.Normal();
      norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    } while (norm == 0);
    for (double& c : x) c /= norm;
  }
  g.adjacency.assign(n * n, 0);
  const double r2 = r * r;
  for (int64_t i = 0; i < n; ++i) {
    for (int64_t j = i + 1; j < n; ++j) {
      double d2 = 0;
      for (int c = 0; c < 3; ++c) {
        const double diff = g.latent[i][c] - g.latent[j][c];
        d2 += diff * diff;
      }
      // r = 2 is the diameter; rounding must not drop antipodal pairs.
      const uint8_t e = (d2 <= r2 || r >= 2) ? 1 : 0;
      g.adjacency[i * n + j] = g.adjacency[j * n + i] = e;
    }
  }
  return g;
}

absl::StatusOr<GeometricGraph> GraphFromEdges(
    int64_t n, const std::vector<std::pair<int64_t, int64_t>>& edges) {
  if (n < 3) return absl::InvalidArgumentError("need n >= 3 nodes");
  GeometricGraph g;
  g.n = n;
  g.adjacency.assign(n * n, 0);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      return absl::InvalidArgumentError("edge endpoint out of range");
    }
    if (i == j) return absl::InvalidArgumentError("self loops not allowed");
    g.adjacency[i * n + j] = g.adjacency[j * n + i] = 1;
  }
  return g;
}

absl::StatusOr<GeometricGraph> ReadEdgeList(const std::string& path,
                                            int64_t n) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::vector<std::pair<int64_t, int64_t>> edges;
  std::string line;
  int64_t lineno = 0, top = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    int64_t i, j;
    if (!(ls >> i)) {
      if (ls.eof()) continue;  // blank line
      return absl::InvalidArgumentError(
          absl::StrCat(path, ":", lineno, ": malformed edge"));
    }
    std::string rest;
    if (!(ls >> j) || (ls >> rest) || i < 1 || j < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ":", lineno, ": expected 'i j' with i, j >= 1"));
    }
    top = std::max({top, i, j});
    edges.emplace_back(i - 1, j - 1);
  }
  if (n <= 0) n = top;
  if (top > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge list names node ", top, " but n=", n));
  }
  return GraphFromEdges(n, edges);
}

GeometricGraph InducedSubgraph(const GeometricGraph& g, int64_t begin,
                               int64_t end) {
  GeometricGraph s;
  s.n = end - begin;
  s.r = g.r;
  if (!g.latent.empty()) {
    s.latent.assign(g.latent.begin() + begin, g.latent.begin() + end);
  }
  s.adjacency.assign(s.n * s.n, 0);
  for (int64_t i = 0; i < s.n; ++i) {
    for (int64_t j = 0; j < s.n; ++j) {
      s.adjacency[i * s.n + j] = g.adjacency[(i + begin) * g.n + j + begin];
    }
  }
  return s;
}

double EdgeDensity(const GeometricGraph& g) {
  const double pairs = 0.5 * static_cast<double>(g.n) * (g.n - 1);
  return static_cast<double>(g.EdgeCount()) / pairs;
}

Kernel TriangleKernel(const GeometricGraph& g) {
  auto adj = std::make_shared<const std::vector<uint8_t>>(g.adjacency);
  const int64_t n = g.n;
  return Kernel(
      3,
      [adj, n](std::span<const double> x) {
        const auto i = static_cast<int64_t>(x[0]);
        const auto j = static_cast<int64_t>(x[1]);
        const auto k = static_cast<int64_t>(x[2]);
        const auto& a = *adj;
        return (a[i * n + j] && a[i * n + k] && a[j * n + k]) ? 1.0 : 0.0;
      },
      Bounded{1.0}, "triangle");
}

double TriangleXi(double nu, int64_t n, double gamma) {
  const double nn = static_cast<double>(n);
  const double lg = std::log(2 * nn / gamma);
  return 18 * nu * std::sqrt(2 / nn * lg) + 16 / (3 * nn) * lg +
         9 * nu / nn * std::sqrt(2 / gamma);
}

absl::StatusOr<EstimateReport> PrivateTriangleDensity(
    const GeometricGraph& g, double eps, PrivacyBudget& budget, Rng& rng,
    const TriangleOptions& o) {
  if (g.n < 3) return absl::FailedPreconditionError("need n >= 3 nodes");
  if (auto s = budget.CanSpend(2 * eps); !s.ok()) return s;
  const double nn = static_cast<double>(g.n);
  auto nu = GlobalSensitivityRelease(EdgeDensity(g), o.nu_scale / nn, eps,
                                     budget, rng, "edge density release");
  if (!nu.ok()) return nu.status();
  if (*nu < 0) {
    EstimateReport r;
    r.bottom = true;
    r.bottom_reason = "private edge density is negative";
    return r;
  }
  Dataset ids;
  ids.points.resize(g.n);
  for (int64_t i = 0; i < g.n; ++i) ids.points[i] = static_cast<double>(i);
  auto family = SubsetFamily::AllTuples(g.n, 3);
  if (!family.ok()) return family.status();
  HajekParams p;
  p.eps = eps;
  p.C = 1;
  p.xi = TriangleXi(*nu, g.n, o.gamma);
  p.strict_alg3_scale = o.strict_alg3_scale;
  return PrivateMeanLocalHajek(TriangleKernel(g), ids,
                               std::make_shared<const SubsetFamily>(*family),
                               p, budget, rng);
}

}  // namespace ustatdp
