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

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ustatdp {
namespace {

TEST(PrivacyBudgetTest, SequentialSpendsAdd) {
  PrivacyBudget b(1.0);
  ASSERT_OK(b.Spend(0.25, "a"));
  ASSERT_OK(b.Spend(0.5, "b"));
  EXPECT_DOUBLE_EQ(b.spent(), 0.75);
  EXPECT_DOUBLE_EQ(b.remaining(), 0.25);
  ASSERT_EQ(b.ledger().size(), 2u);
  EXPECT_EQ(b.ledger()[0].label, "a");
  EXPECT_EQ(b.ledger()[1].epsilon, 0.5);
  EXPECT_EQ(b.ledger()[1].branches, 0);
}

TEST(PrivacyBudgetTest, ExhaustionLeavesLedgerUntouched) {
  PrivacyBudget b(1.0);
  ASSERT_OK(b.Spend(0.6, "first"));
  const absl::Status s = b.Spend(0.6, "second");
  EXPECT_EQ(s.code(), absl::StatusCode::kResourceExhausted);
  EXPECT_EQ(b.ledger().size(), 1u);
  EXPECT_DOUBLE_EQ(b.spent(), 0.6);
}

TEST(PrivacyBudgetTest, RoundingAllowance) {
  // Ten spends of 0.1 reach 1 only up to rounding.
  PrivacyBudget b(1.0);
  for (int i = 0; i < 10; ++i) ASSERT_OK(b.Spend(0.1, "tenth"));
  EXPECT_NEAR(b.spent(), 1.0, 1e-12);
  EXPECT_FALSE(b.Spend(1e-6, "more").ok());
}

TEST(PrivacyBudgetTest, RejectsNonPositive) {
  PrivacyBudget b(1.0);
  EXPECT_EQ(b.Spend(0, "zero").code(), absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(b.Spend(-1, "neg").code(), absl::StatusCode::kInvalidArgument);
  EXPECT_TRUE(b.ledger().empty());
}

TEST(PrivacyBudgetTest, CanSpendRecordsNothing) {
  PrivacyBudget b(1.0);
  EXPECT_OK(b.CanSpend(1.0));
  EXPECT_FALSE(b.CanSpend(1.5).ok());
  EXPECT_TRUE(b.ledger().empty());
  EXPECT_EQ(b.spent(), 0);
}

TEST(PrivacyBudgetTest, ParallelBranchesDebitMax) {
  PrivacyBudget b(2.0);
  ASSERT_OK(b.Spend(0.5, "setup"));
  std::vector<PrivacyBudget> branches;
  for (double e : {0.3, 1.0, 0.7}) {
    PrivacyBudget child = b.Fork();
    EXPECT_DOUBLE_EQ(child.total(), 1.5);
    ASSERT_OK(child.Spend(e, "branch"));
    branches.push_back(child);
  }
  ASSERT_OK(b.MergeParallel(branches, "chunks"));
  EXPECT_DOUBLE_EQ(b.spent(), 1.5);
  ASSERT_EQ(b.ledger().size(), 2u);
  EXPECT_EQ(b.ledger()[1].branches, 3);
  EXPECT_DOUBLE_EQ(b.ledger()[1].epsilon, 1.0);
}

TEST(PrivacyBudgetTest, ParallelSumWouldOverflow) {
  // Three branches of 0.9 fit in parallel but not in sequence.
  PrivacyBudget b(1.0);
  std::vector<PrivacyBudget> branches(3, b.Fork());
  for (auto& c : branches) ASSERT_OK(c.Spend(0.9, "x"));
  ASSERT_OK(b.MergeParallel(branches, "chunks"));
  EXPECT_DOUBLE_EQ(b.spent(), 0.9);
}

TEST(PrivacyBudgetTest, SummaryListsEveryEntry) {
  PrivacyBudget b(1.0);
  ASSERT_OK(b.Spend(0.25, "coinpress step 1"));
  std::vector<PrivacyBudget> br(2, b.Fork());
  ASSERT_OK(br[0].Spend(0.5, "x"));
  ASSERT_OK(b.MergeParallel(br, "median of 2 chunks"));
  const std::string s = b.Summary();
  EXPECT_NE(s.find("coinpress step 1"), std::string::npos) << s;
  EXPECT_NE(s.find("max of 2 parallel"), std::string::npos) << s;
  EXPECT_NE(s.find("total spent 0.75 of 1"), std::string::npos) << s;
}

}  // namespace
}  // namespace ustatdp
