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

#ifndef USTATDP_SUBSET_FAMILY_H_
#define USTATDP_SUBSET_FAMILY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ustatdp/combinatorics.h"

namespace ustatdp {

enum class FamilyKind { kAllTuples, kSubsampled, kExplicit };

// Outcome of the incidence regularity check. A failed check is a value
// (the estimator returns bottom), not an error.
struct Regularity {
  bool ok = true;
  std::string reason;
};

// An indexed collection of M k-subsets of {0..n-1}, possibly with repeats.
// AllTuples families are implicit: subsets are generated in lexicographic
// order on demand and incidence counts are closed form. Other kinds store
// their subsets and count incidence on construction.
class SubsetFamily {
 public:
  static absl::StatusOr<SubsetFamily> AllTuples(
      int64_t n, int k, uint64_t cap = kDefaultTupleCap);
  // M subsets drawn uniformly with replacement from all k-subsets.
  static absl::StatusOr<SubsetFamily> Subsample(int64_t n, int k, uint64_t m,
                                                uint64_t seed);
  // Consecutive blocks {0..k-1}, {k..2k-1}, ...; the remainder is dropped.
  static absl::StatusOr<SubsetFamily> DisjointChunks(int64_t n, int k);
  // subsets holds M*k zero-based indices, k per subset.
  static absl::StatusOr<SubsetFamily> FromSubsets(int64_t n, int k,
                                                  std::vector<uint32_t> subsets);

  int64_t n() const { return n_; }
  int k() const { return k_; }
  uint64_t size() const { return m_; }
  FamilyKind kind() const { return kind_; }
  bool is_all_tuples() const { return kind_ == FamilyKind::kAllTuples; }
  std::optional<uint64_t> seed() const { return seed_; }

  // Calls fn(std::span<const uint32_t>) once per subset, in family order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    if (is_all_tuples()) {
      ForEachCombination(static_cast<uint32_t>(n_), static_cast<uint32_t>(k_),
                         [&](std::span<const uint32_t> s) {
                           fn(s);
                           return true;
                         });
      return;
    }
    for (uint64_t j = 0; j < m_; ++j) fn(subset(j));
  }

  // j-th subset of a stored family. Not available for AllTuples.
  std::span<const uint32_t> subset(uint64_t j) const {
    return std::span<const uint32_t>(subsets_).subspan(j * k_, k_);
  }

  // M_i for every index.
  const std::vector<uint64_t>& incidence() const { return incidence_; }
  // M_ij for i != j.
  uint64_t pair_count(uint32_t i, uint32_t j) const;
  // max over j != i of M_ij.
  uint64_t max_pair_count(uint32_t i) const { return max_pair_[i]; }

  // max_i M_i / M, rounded once from the exact ratio.
  double dep() const;

  // M_i > 0, M_i/M <= 3k/n and M_ij/M_i <= 3k/n for all i != j.
  // Comparisons are exact; ties pass.
  Regularity CheckRegularity() const;

 private:
  SubsetFamily() = default;
  void CountIncidence();

  int64_t n_ = 0;
  int k_ = 0;
  uint64_t m_ = 0;
  FamilyKind kind_ = FamilyKind::kExplicit;
  std::optional<uint64_t> seed_;
  std::vector<uint32_t> subsets_;
  std::vector<uint64_t> incidence_;
  std::vector<uint64_t> max_pair_;
  std::unordered_map<uint64_t, uint64_t> pairs_;
  uint64_t all_pair_count_ = 0;
};

// One subset per line, space-separated one-based indices.
absl::Status WriteFamily(const SubsetFamily& f, const std::string& path);
absl::StatusOr<SubsetFamily> ReadFamily(const std::string& path, int64_t n);

}  // namespace ustatdp

#endif  // USTATDP_SUBSET_FAMILY_H_
