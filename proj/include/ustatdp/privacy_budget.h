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

#ifndef USTATDP_PRIVACY_BUDGET_H_
#define USTATDP_PRIVACY_BUDGET_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"

namespace ustatdp {

struct LedgerEntry {
  std::string label;
  double epsilon = 0;
  // Number of disjoint branches merged into this entry; 0 for a plain spend.
  int branches = 0;
};

// An epsilon ledger. Sequential spends add up. Branches that run on
// disjoint parts of the data are forked, run against their own child
// budget, and merged back as a single debit equal to the largest branch.
// Not thread safe.
class PrivacyBudget {
 public:
  explicit PrivacyBudget(double total) : total_(total) {}

  double total() const { return total_; }
  double spent() const { return spent_; }
  double remaining() const { return total_ - spent_; }
  const std::vector<LedgerEntry>& ledger() const { return ledger_; }

  // InvalidArgument if eps <= 0, ResourceExhausted if the total would be
  // exceeded (with a 1e-9 relative allowance for rounding).
  absl::Status Spend(double eps, std::string label);
  // Checks that eps could be spent without recording anything.
  absl::Status CanSpend(double eps) const;

  // A fresh child holding everything that remains.
  PrivacyBudget Fork() const { return PrivacyBudget(remaining()); }
  // Debits max over branches of branch.spent().
  absl::Status MergeParallel(std::span<const PrivacyBudget> branches,
                             std::string label);

  // One line per entry followed by the total.
  std::string Summary() const;

 private:
  double total_;
  double spent_ = 0;
  std::vector<LedgerEntry> ledger_;
};

}  // namespace ustatdp

#endif  // USTATDP_PRIVACY_BUDGET_H_
