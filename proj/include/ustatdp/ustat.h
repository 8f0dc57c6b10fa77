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

#ifndef USTATDP_USTAT_H_
#define USTATDP_USTAT_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ustatdp/dataset.h"
#include "ustatdp/kernel.h"
#include "ustatdp/subset_family.h"

namespace ustatdp {

// (1/M) sum over the family of h(X_S). Errors if shapes disagree or the
// kernel returns a non-finite value.
absl::StatusOr<double> EvaluateUStat(const Kernel& h, const Dataset& d,
                                     const SubsetFamily& f);

// (1/M_i) sum over subsets containing i. FailedPrecondition if M_i = 0.
absl::StatusOr<double> LocalProjection(const Kernel& h, const Dataset& d,
                                       const SubsetFamily& f, uint32_t i);

// What the Hajek estimator needs from a family of kernel values.
class TupleStatistic {
 public:
  virtual ~TupleStatistic() = default;

  virtual int64_t n() const = 0;
  virtual int k() const = 0;
  virtual bool all_tuples() const = 0;
  virtual Regularity CheckRegularity() const = 0;
  // A_n.
  virtual double Mean() const = 0;
  // Local projections for every index.
  virtual std::vector<double> Projections() const = 0;
  // (1/M) sum_S [h(X_S) w(S) + mean (1 - w(S))], w(S) = min_{i in S} w_i.
  // Returns mean itself when every weight is 1 or every weight is 0.
  virtual double ReweightedMean(std::span<const double> weights,
                                double mean) const = 0;
};

// Kernel values materialized over a family, in family order.
class TupleTable : public TupleStatistic {
 public:
  static absl::StatusOr<TupleTable> Build(
      const Kernel& h, const Dataset& d,
      std::shared_ptr<const SubsetFamily> f);

  const SubsetFamily& family() const { return *family_; }
  const std::vector<double>& values() const { return values_; }

  int64_t n() const override { return family_->n(); }
  int k() const override { return family_->k(); }
  bool all_tuples() const override { return family_->is_all_tuples(); }
  Regularity CheckRegularity() const override {
    return family_->CheckRegularity();
  }
  double Mean() const override;
  std::vector<double> Projections() const override;
  double ReweightedMean(std::span<const double> weights,
                        double mean) const override;
  // Local projections of the reweighted values g(X_S).
  std::vector<double> ReweightedProjections(std::span<const double> weights,
                                            double mean) const;

 private:
  TupleTable(std::shared_ptr<const SubsetFamily> f, std::vector<double> v)
      : family_(std::move(f)), values_(std::move(v)) {}

  template <typename Fn>
  void ForEachValue(Fn&& fn) const;

  std::shared_ptr<const SubsetFamily> family_;
  std::vector<double> values_;
};

// Collision kernel 1(x_i = x_j) over all pairs, without enumerating pairs.
// Equivalent to a TupleTable over AllTuples(n, 2) up to rounding, in
// O(n log n) time.
class CollisionPairs : public TupleStatistic {
 public:
  static absl::StatusOr<CollisionPairs> Build(const Dataset& d);

  int64_t n() const override { return static_cast<int64_t>(labels_.size()); }
  int k() const override { return 2; }
  bool all_tuples() const override { return true; }
  Regularity CheckRegularity() const override { return {}; }
  double Mean() const override;
  std::vector<double> Projections() const override;
  double ReweightedMean(std::span<const double> weights,
                        double mean) const override;

 private:
  explicit CollisionPairs(std::vector<int64_t> labels,
                          std::vector<int64_t> counts)
      : labels_(std::move(labels)), counts_(std::move(counts)) {}

  std::vector<int64_t> labels_;  // dense category ids
  std::vector<int64_t> counts_;  // per dense category
};

}  // namespace ustatdp

#endif  // USTATDP_USTAT_H_
