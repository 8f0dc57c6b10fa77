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

#include "ustatdp/ustat.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "absl/strings/str_cat.h"

namespace ustatdp {

namespace {

absl::Status CheckShapes(const Kernel& h, const Dataset& d,
                         const SubsetFamily& f) {
  if (static_cast<int64_t>(d.size()) != f.n()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "family is over n=", f.n(), " but dataset has ", d.size(), " points"));
  }
  if (h.degree() != f.k()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "kernel degree ", h.degree(), " differs from subset size ", f.k()));
  }
  return absl::OkStatus();
}

absl::Status KernelFailure(std::span<const uint32_t> s) {
  std::string where;
  for (uint32_t i : s) absl::StrAppend(&where, where.empty() ? "" : ",", i + 1);
  return absl::InvalidArgumentError(
      absl::StrCat("kernel returned a non-finite value on {", where, "}"));
}

// Evaluates h on every subset of f, calling sink(subset, value).
template <typename Sink>
absl::Status Sweep(const Kernel& h, const Dataset& d, const SubsetFamily& f,
                   Sink&& sink) {
  if (auto s = CheckShapes(h, d, f); !s.ok()) return s;
  std::vector<double> args(f.k());
  absl::Status status;
  f.ForEach([&](std::span<const uint32_t> s) {
    if (!status.ok()) return;
    for (int a = 0; a < f.k(); ++a) args[a] = d.points[s[a]];
    const double v = h(args);
    if (!std::isfinite(v)) {
      status = KernelFailure(s);
      return;
    }
    sink(s, v);
  });
  return status;
}

}  // namespace

absl::StatusOr<double> EvaluateUStat(const Kernel& h, const Dataset& d,
                                     const SubsetFamily& f) {
  double sum = 0;
  auto s = Sweep(h, d, f, [&](std::span<const uint32_t>, double v) {
    sum += v;
  });
  if (!s.ok()) return s;
  return sum / static_cast<double>(f.size());
}

absl::StatusOr<double> LocalProjection(const Kernel& h, const Dataset& d,
                                       const SubsetFamily& f, uint32_t i) {
  if (i >= f.n()) return absl::InvalidArgumentError("index out of range");
  if (f.incidence()[i] == 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("index ", i + 1, " is in no subset"));
  }
  double sum = 0;
  auto s = Sweep(h, d, f, [&](std::span<const uint32_t> sub, double v) {
    if (std::find(sub.begin(), sub.end(), i) != sub.end()) sum += v;
  });
  if (!s.ok()) return s;
  return sum / static_cast<double>(f.incidence()[i]);
}

absl::StatusOr<TupleTable> TupleTable::Build(
    const Kernel& h, const Dataset& d, std::shared_ptr<const SubsetFamily> f) {
  std::vector<double> values;
  values.reserve(f->size());
  auto s = Sweep(h, d, *f, [&](std::span<const uint32_t>, double v) {
    values.push_back(v);
  });
  if (!s.ok()) return s;
  return TupleTable(std::move(f), std::move(values));
}

template <typename Fn>
void TupleTable::ForEachValue(Fn&& fn) const {
  uint64_t j = 0;
  family_->ForEach([&](std::span<const uint32_t> s) { fn(s, values_[j++]); });
}

double TupleTable::Mean() const {
  double sum = 0;
  for (double v : values_) sum += v;
  return sum / static_cast<double>(values_.size());
}

std::vector<double> TupleTable::Projections() const {
  std::vector<double> sums(n(), 0.0);
  ForEachValue([&](std::span<const uint32_t> s, double v) {
    for (uint32_t i : s) sums[i] += v;
  });
  const auto& inc = family_->incidence();
  for (int64_t i = 0; i < n(); ++i) {
    sums[i] = inc[i] ? sums[i] / static_cast<double>(inc[i]) : std::nan("");
  }
  return sums;
}

namespace {

bool AllEqual(std::span<const double> w, double x) {
  return std::all_of(w.begin(), w.end(), [x](double v) { return v == x; });
}

double SubsetWeight(std::span<const uint32_t> s, std::span<const double> w) {
  double m = 1.0;
  for (uint32_t i : s) m = std::min(m, w[i]);
  return m;
}

}  // namespace

double TupleTable::ReweightedMean(std::span<const double> weights,
                                  double mean) const {
  if (AllEqual(weights, 1.0)) return Mean();
  if (AllEqual(weights, 0.0)) return mean;
  double sum = 0;
  ForEachValue([&](std::span<const uint32_t> s, double v) {
    const double w = SubsetWeight(s, weights);
    sum += v * w + mean * (1.0 - w);
  });
  return sum / static_cast<double>(values_.size());
}

std::vector<double> TupleTable::ReweightedProjections(
    std::span<const double> weights, double mean) const {
  std::vector<double> sums(n(), 0.0);
  ForEachValue([&](std::span<const uint32_t> s, double v) {
    const double w = SubsetWeight(s, weights);
    const double g = v * w + mean * (1.0 - w);
    for (uint32_t i : s) sums[i] += g;
  });
  const auto& inc = family_->incidence();
  for (int64_t i = 0; i < n(); ++i) {
    sums[i] = inc[i] ? sums[i] / static_cast<double>(inc[i]) : std::nan("");
  }
  return sums;
}

absl::StatusOr<CollisionPairs> CollisionPairs::Build(const Dataset& d) {
  if (d.size() < 2) {
    return absl::FailedPreconditionError("need at least two points");
  }
  std::map<double, int64_t> dense;
  std::vector<int64_t> labels(d.size());
  std::vector<int64_t> counts;
  for (size_t i = 0; i < d.size(); ++i) {
    auto [it, inserted] = dense.try_emplace(d[i], dense.size());
    if (inserted) counts.push_back(0);
    labels[i] = it->second;
    ++counts[it->second];
  }
  return CollisionPairs(std::move(labels), std::move(counts));
}

double CollisionPairs::Mean() const {
  const double n = static_cast<double>(labels_.size());
  double matches = 0;
  for (int64_t c : counts_) matches += 0.5 * c * (c - 1);
  return matches / (0.5 * n * (n - 1));
}

std::vector<double> CollisionPairs::Projections() const {
  const double denom = static_cast<double>(labels_.size() - 1);
  std::vector<double> p(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) {
    p[i] = static_cast<double>(counts_[labels_[i]] - 1) / denom;
  }
  return p;
}

namespace {

// sum_{i<j} min(w_i, w_j) for the given weights.
double PairMinSum(std::vector<double>& w) {
  std::sort(w.begin(), w.end());
  double s = 0;
  const size_t len = w.size();
  for (size_t r = 0; r < len; ++r) s += w[r] * static_cast<double>(len - 1 - r);
  return s;
}

}  // namespace

double CollisionPairs::ReweightedMean(std::span<const double> weights,
                                      double mean) const {
  if (AllEqual(weights, 1.0)) return Mean();
  if (AllEqual(weights, 0.0)) return mean;
  // g_S - mean = w(S) (h_S - mean), summed separately over matching pairs
  // (h = 1) and all pairs.
  std::vector<double> all(weights.begin(), weights.end());
  const double total = PairMinSum(all);
  std::vector<std::vector<double>> by_cat(counts_.size());
  for (size_t i = 0; i < labels_.size(); ++i) {
    by_cat[labels_[i]].push_back(weights[i]);
  }
  double matching = 0;
  for (auto& ws : by_cat) matching += PairMinSum(ws);
  const double n = static_cast<double>(labels_.size());
  const double m = 0.5 * n * (n - 1);
  return mean + (matching - mean * total) / m;
}

}  // namespace ustatdp
