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

#include "ustatdp/privacy_budget.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace ustatdp {

absl::Status PrivacyBudget::CanSpend(double eps) const {
  if (!(eps > 0) || !std::isfinite(eps)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive and finite, got ", eps));
  }
  if (spent_ + eps > total_ * (1 + 1e-9)) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "privacy budget exhausted: spent %.6g of %.6g, requested %.6g",
        spent_, total_, eps));
  }
  return absl::OkStatus();
}

absl::Status PrivacyBudget::Spend(double eps, std::string label) {
  if (auto s = CanSpend(eps); !s.ok()) return s;
  spent_ += eps;
  ledger_.push_back({std::move(label), eps, 0});
  return absl::OkStatus();
}

absl::Status PrivacyBudget::MergeParallel(
    std::span<const PrivacyBudget> branches, std::string label) {
  double top = 0;
  for (const auto& b : branches) top = std::max(top, b.spent());
  if (top == 0) return absl::OkStatus();
  if (auto s = CanSpend(top); !s.ok()) return s;
  spent_ += top;
  ledger_.push_back(
      {std::move(label), top, static_cast<int>(branches.size())});
  return absl::OkStatus();
}

std::string PrivacyBudget::Summary() const {
  std::string out;
  for (const auto& e : ledger_) {
    if (e.branches > 0) {
      absl::StrAppendFormat(&out, "  %-36s eps=%.6g (max of %d parallel)\n",
                            e.label, e.epsilon, e.branches);
    } else {
      absl::StrAppendFormat(&out, "  %-36s eps=%.6g\n", e.label, e.epsilon);
    }
  }
  absl::StrAppendFormat(&out, "  total spent %.6g of %.6g\n", spent_, total_);
  return out;
}

}  // namespace ustatdp
