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

#ifndef USTATDP_APPLICATIONS_H_
#define USTATDP_APPLICATIONS_H_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ustatdp/dataset.h"
#include "ustatdp/hajek.h"
#include "ustatdp/kernel.h"
#include "ustatdp/privacy_budget.h"
#include "ustatdp/random.h"
#include "ustatdp/report.h"

namespace ustatdp {

// p_i = (1 + a_i)/m with a_i in [-1, 1] summing to zero.
struct PerturbedUniform {
  int m = 0;
  std::vector<double> a;
  std::vector<double> probs;

  static absl::StatusOr<PerturbedUniform> Make(std::vector<double> a);
  static PerturbedUniform Uniform(int m);
  // a_i = +delta on the first floor(m/2) atoms, -delta on the next
  // floor(m/2), and 0 on a middle atom left over when m is odd.
  static absl::StatusOr<PerturbedUniform> TwoLevel(int m, double delta);
};

// "uniform", "two-level:<delta>", or a comma-separated list of the a_i.
absl::StatusOr<PerturbedUniform> ParsePerturbation(const std::string& spec,
                                                   int m);

// n i.i.d. labels in 1..m.
Dataset SampleMultinomial(const PerturbedUniform& dist, int64_t n, Rng& rng);

// sum_i p_i^2 = 1/m + |a|^2/m^2.
double CollisionTheta(const PerturbedUniform& dist);

// 6/m + 8 log(4n/gamma)/n.
double UniformityXi(int m, int64_t n, double gamma);
// (1 + 3 delta^2/4)/m.
double UniformityThreshold(int m, double delta);

struct UniformityOptions {
  double gamma = 0.01;
  bool strict_alg3_scale = false;
  // Counts collisions per category instead of enumerating pairs.
  bool pair_fast_path = true;
};

struct UniformityDecision {
  bool reject = false;
  double threshold = 0;
  EstimateReport report;
};

// Private collision probability over all pairs with C = 1 and the xi
// above. FailedPrecondition if n < 2; InvalidArgument if a label is not in
// 1..m.
absl::StatusOr<EstimateReport> PrivateCollisionEstimate(
    const Dataset& data, int m, double eps, PrivacyBudget& budget, Rng& rng,
    const UniformityOptions& o = {});

// Rejects approximate uniformity iff the private estimate reaches the
// threshold. A bottom estimate accepts.
absl::StatusOr<UniformityDecision> UniformityTest(
    const Dataset& data, int m, double delta, double eps,
    PrivacyBudget& budget, Rng& rng, const UniformityOptions& o = {});

struct GeometricGraph {
  int64_t n = 0;
  double r = 0;
  // Empty when the graph was read from an edge list.
  std::vector<std::array<double, 3>> latent;
  // Row-major n x n, symmetric, zero diagonal.
  std::vector<uint8_t> adjacency;

  bool edge(int64_t i, int64_t j) const { return adjacency[i * n + j] != 0; }
  int64_t EdgeCount() const;
};

// Latent points uniform on the unit sphere in 3-space (normalized
// Gaussians); i ~ j iff their distance is at most r.
absl::StatusOr<GeometricGraph> SampleRgg(int64_t n, double r, Rng& rng);
// Zero-based undirected edges.
absl::StatusOr<GeometricGraph> GraphFromEdges(
    int64_t n, const std::vector<std::pair<int64_t, int64_t>>& edges);
// One "i j" pair per line, one-based. With n <= 0 the node count is the
// largest index seen.
absl::StatusOr<GeometricGraph> ReadEdgeList(const std::string& path,
                                            int64_t n = 0);
// Graph induced on nodes begin..end-1, relabelled from 0.
GeometricGraph InducedSubgraph(const GeometricGraph& g, int64_t begin,
                               int64_t end);

double EdgeDensity(const GeometricGraph& g);
// 1(all three edges present) over node ids stored as dataset values.
Kernel TriangleKernel(const GeometricGraph& g);

// 18 nu sqrt((2/n) log(2n/gamma)) + (16/(3n)) log(2n/gamma)
//   + (9 nu / n) sqrt(2/gamma).
double TriangleXi(double nu, int64_t n, double gamma);

struct TriangleOptions {
  double gamma = 0.01;
  // Laplace scale of the edge-density release is this over (n eps).
  double nu_scale = 2.0;
  bool strict_alg3_scale = false;
};

// Releases nu = edge density + Lap(nu_scale/(n eps)) at eps; bottom if
// nu < 0; otherwise runs the Hajek estimator on the triangle kernel over
// all triples at a further eps.
absl::StatusOr<EstimateReport> PrivateTriangleDensity(
    const GeometricGraph& g, double eps, PrivacyBudget& budget, Rng& rng,
    const TriangleOptions& o = {});

}  // namespace ustatdp

#endif  // USTATDP_APPLICATIONS_H_
