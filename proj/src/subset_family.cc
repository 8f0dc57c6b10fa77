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

#include "ustatdp/subset_family.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "ustatdp/random.h"

namespace ustatdp {

namespace {

absl::Status CheckShape(int64_t n, int k) {
  if (k < 1 || n < k) {
    return absl::InvalidArgumentError(
        absl::StrCat("need 1 <= k <= n, got n=", n, " k=", k));
  }
  if (n > UINT32_MAX) return absl::InvalidArgumentError("n too large");
  return absl::OkStatus();
}

// Floyd's algorithm; returns a sorted uniform k-subset of {0..n-1}.
void DrawSubset(Rng& rng, uint32_t n, uint32_t k, uint32_t* out) {
  uint32_t filled = 0;
  for (uint32_t j = n - k; j < n; ++j) {
    const auto t = static_cast<uint32_t>(rng.UniformInt(uint64_t{j} + 1));
    const bool seen = std::find(out, out + filled, t) != out + filled;
    out[filled++] = seen ? j : t;
  }
  std::sort(out, out + k);
}

}  // namespace

absl::StatusOr<SubsetFamily> SubsetFamily::AllTuples(int64_t n, int k,
                                                     uint64_t cap) {
  if (auto s = CheckShape(n, k); !s.ok()) return s;
  auto m = BinomialWithCap(n, k, cap);
  if (!m.ok()) return m.status();
  SubsetFamily f;
  f.n_ = n;
  f.k_ = k;
  f.m_ = *m;
  f.kind_ = FamilyKind::kAllTuples;
  const auto mi = static_cast<uint64_t>(Binomial(n - 1, k - 1));
  f.all_pair_count_ = static_cast<uint64_t>(Binomial(n - 2, k - 2));
  f.incidence_.assign(n, mi);
  f.max_pair_.assign(n, n > 1 ? f.all_pair_count_ : 0);
  return f;
}

absl::StatusOr<SubsetFamily> SubsetFamily::Subsample(int64_t n, int k,
                                                     uint64_t m,
                                                     uint64_t seed) {
  if (auto s = CheckShape(n, k); !s.ok()) return s;
  if (m < 1) return absl::InvalidArgumentError("M must be positive");
  SubsetFamily f;
  f.n_ = n;
  f.k_ = k;
  f.m_ = m;
  f.kind_ = FamilyKind::kSubsampled;
  f.seed_ = seed;
  f.subsets_.resize(m * k);
  Rng rng(seed);
  for (uint64_t j = 0; j < m; ++j) {
    DrawSubset(rng, static_cast<uint32_t>(n), k, f.subsets_.data() + j * k);
  }
  f.CountIncidence();
  return f;
}

absl::StatusOr<SubsetFamily> SubsetFamily::DisjointChunks(int64_t n, int k) {
  if (auto s = CheckShape(n, k); !s.ok()) return s;
  const int64_t chunks = n / k;
  std::vector<uint32_t> subsets(chunks * k);
  for (int64_t i = 0; i < chunks * k; ++i) subsets[i] = i;
  return FromSubsets(n, k, std::move(subsets));
}

absl::StatusOr<SubsetFamily> SubsetFamily::FromSubsets(
    int64_t n, int k, std::vector<uint32_t> subsets) {
  if (auto s = CheckShape(n, k); !s.ok()) return s;
  if (subsets.empty() || subsets.size() % k != 0) {
    return absl::InvalidArgumentError("subset list must hold M*k indices");
  }
  SubsetFamily f;
  f.n_ = n;
  f.k_ = k;
  f.m_ = subsets.size() / k;
  f.kind_ = FamilyKind::kExplicit;
  for (uint64_t j = 0; j < f.m_; ++j) {
    auto first = subsets.begin() + j * k;
    std::sort(first, first + k);
    if (first[k - 1] >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("subset ", j + 1, " has an index beyond n=", n));
    }
    if (std::adjacent_find(first, first + k) != first + k) {
      return absl::InvalidArgumentError(
          absl::StrCat("subset ", j + 1, " repeats an index"));
    }
  }
  f.subsets_ = std::move(subsets);
  f.CountIncidence();
  return f;
}

void SubsetFamily::CountIncidence() {
  incidence_.assign(n_, 0);
  max_pair_.assign(n_, 0);
  pairs_.clear();
  for (uint64_t j = 0; j < m_; ++j) {
    auto s = subset(j);
    for (int a = 0; a < k_; ++a) {
      ++incidence_[s[a]];
      for (int b = a + 1; b < k_; ++b) {
        ++pairs_[uint64_t{s[a]} * n_ + s[b]];
      }
    }
  }
  for (const auto& [key, count] : pairs_) {
    const uint64_t i = key / n_, j = key % n_;
    max_pair_[i] = std::max(max_pair_[i], count);
    max_pair_[j] = std::max(max_pair_[j], count);
  }
}

uint64_t SubsetFamily::pair_count(uint32_t i, uint32_t j) const {
  if (i == j) return 0;
  if (is_all_tuples()) return all_pair_count_;
  if (i > j) std::swap(i, j);
  auto it = pairs_.find(uint64_t{i} * n_ + j);
  return it == pairs_.end() ? 0 : it->second;
}

double SubsetFamily::dep() const {
  const uint64_t top = *std::max_element(incidence_.begin(), incidence_.end());
  return RatioToDouble(top, m_);
}

Regularity SubsetFamily::CheckRegularity() const {
  using u128 = unsigned __int128;
  const u128 bound = 3 * static_cast<u128>(k_);
  for (int64_t i = 0; i < n_; ++i) {
    if (incidence_[i] == 0) {
      return {false, absl::StrCat("index ", i + 1, " is in no subset")};
    }
  }
  for (int64_t i = 0; i < n_; ++i) {
    if (static_cast<u128>(incidence_[i]) * n_ > bound * m_) {
      return {false, absl::StrCat("M_i/M > 3k/n at index ", i + 1)};
    }
  }
  for (int64_t i = 0; i < n_; ++i) {
    if (static_cast<u128>(max_pair_[i]) * n_ > bound * incidence_[i]) {
      return {false, absl::StrCat("M_ij/M_i > 3k/n at index ", i + 1)};
    }
  }
  return {};
}

absl::Status WriteFamily(const SubsetFamily& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  f.ForEach([&](std::span<const uint32_t> s) {
    for (size_t a = 0; a < s.size(); ++a) {
      out << (a ? " " : "") << s[a] + 1;
    }
    out << '\n';
  });
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("write failed: ", path));
}

absl::StatusOr<SubsetFamily> ReadFamily(const std::string& path, int64_t n) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::vector<uint32_t> flat;
  int k = 0;
  std::string line;
  int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    int64_t v;
    int count = 0;
    while (ls >> v) {
      if (v < 1 || v > n) {
        return absl::InvalidArgumentError(
            absl::StrCat(path, ":", lineno, ": index out of range"));
      }
      flat.push_back(static_cast<uint32_t>(v - 1));
      ++count;
    }
    if (!ls.eof()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ":", lineno, ": malformed subset"));
    }
    if (count == 0) continue;
    if (k == 0) k = count;
    if (count != k) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ":", lineno, ": expected ", k, " indices"));
    }
  }
  if (k == 0) return absl::InvalidArgumentError("empty family file");
  return SubsetFamily::FromSubsets(n, k, std::move(flat));
}

}  // namespace ustatdp
