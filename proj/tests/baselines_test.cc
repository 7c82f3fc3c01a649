// Copyright 2026 The TFI Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tfi/baselines.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.h"
#include "tfi/errors.h"

namespace tfi {
namespace {

TEST(BinomialTailLogTest, AllSuccesses) {
  const BinomialTestResult r = BinomialTailLog(10, 10, 0.5);
  EXPECT_EQ(r.log_p_value, 10 * std::log(0.5));
  EXPECT_NEAR(r.p_value, 1.0 / 1024, 1e-18);
}

TEST(BinomialTailLogTest, ZeroSuccessesIsWholeMass) {
  const BinomialTestResult r = BinomialTailLog(0, 17, 0.3);
  EXPECT_EQ(r.log_p_value, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
}

TEST(BinomialTailLogTest, ReferenceValues) {
  // Exact rational sums.
  EXPECT_NEAR(BinomialTailLog(5, 10, 0.3).p_value, 0.15026833260000000,
              1e-12);
  EXPECT_NEAR(BinomialTailLog(10, 20, 0.5).p_value, 0.5880985260009766,
              1e-12);
  EXPECT_NEAR(BinomialTailLog(50, 100, 0.5).p_value, 0.5397946186935894,
              1e-12);
}

TEST(BinomialTailLogTest, MatchesRationalSummation) {
  for (int n = 1; n <= 20; ++n) {
    for (int num : {1, 3, 5, 7, 9}) {
      for (int k = 0; k <= n; ++k) {
        const double want = oracle::BinomialTail(k, n, num, 10);
        const double got = BinomialTailLog(k, n, num / 10.0).p_value;
        EXPECT_NEAR(got, want, 1e-10 * want) << k << "/" << n << " @" << num;
      }
    }
  }
}

TEST(BinomialTailLogTest, HugeSamplesStayFinite) {
  const BinomialTestResult r = BinomialTailLog(60000, 100000, 0.5);
  EXPECT_LT(r.log_p_value, -1000.0);
  EXPECT_TRUE(std::isfinite(r.log_p_value));
  EXPECT_EQ(r.p_value, 0.0);
  EXPECT_NEAR(BinomialTailLog(50000, 100000, 0.5).p_value, 0.5, 0.01);
}

TEST(BinomialTailLogTest, Monotone) {
  double prev = 1.0;
  for (int k = 0; k <= 200; ++k) {
    const double lp = BinomialTailLog(k, 200, 0.37).log_p_value;
    EXPECT_LE(lp, prev + 1e-15);
    prev = lp;
  }
  prev = -1e300;
  for (double th = 0.05; th < 1.0; th += 0.05) {
    const double lp = BinomialTailLog(40, 100, th).log_p_value;
    EXPECT_GE(lp, prev - 1e-15);
    prev = lp;
  }
}

TEST(BinomialTailLogTest, DomainErrors) {
  EXPECT_THROW(BinomialTailLog(-1, 10, 0.5), ParameterError);
  EXPECT_THROW(BinomialTailLog(11, 10, 0.5), ParameterError);
  EXPECT_THROW(BinomialTailLog(0, 0, 0.5), ParameterError);
  EXPECT_THROW(BinomialTailLog(1, 10, 0.0), ParameterError);
  EXPECT_THROW(BinomialTailLog(1, 10, 1.0), ParameterError);
}

TEST(LogHypothesesPowersetTest, Values) {
  EXPECT_NEAR(LogHypothesesPowerset(1), 0.0, 1e-15);
  EXPECT_NEAR(LogHypothesesPowerset(2), std::log(3.0), 1e-15);
  EXPECT_NEAR(LogHypothesesPowerset(10), std::log(1023.0), 1e-13);
  EXPECT_NEAR(LogHypothesesPowerset(5000), 5000 * std::log(2.0), 1e-9);
  EXPECT_THROW(LogHypothesesPowerset(0), ParameterError);
}

TEST(BonferroniMethodTest, ReportsUnanimousItem) {
  // Item 2 appears once so that |I| = 2 and m = 3.
  std::vector<Transaction> ts(10000, Itemset{1});
  ts.back() = {1, 2};
  const ItemsetCollection out =
      BonferroniMethod(TransactionDataset(ts), 0.5, 0.1);
  EXPECT_EQ(out.Itemsets(), (std::vector<Itemset>{{1}}));
}

TEST(BonferroniMethodTest, BoundaryFrequencyNotReported) {
  std::vector<Transaction> ts;
  for (int i = 0; i < 20; ++i) ts.push_back(i < 10 ? Itemset{1} : Itemset{2});
  EXPECT_TRUE(BonferroniMethod(TransactionDataset(ts), 0.5, 0.1).empty());
}

TEST(BonferroniMethodTest, EmptyWhenNothingFrequent) {
  const TransactionDataset ds(std::vector<Transaction>{{1}, {2}, {3}});
  EXPECT_TRUE(BonferroniMethod(ds, 0.9, 0.1).empty());
}

TEST(HoldoutMethodTest, NoCandidates) {
  const TransactionDataset e(std::vector<Transaction>{{1}, {2}});
  const TransactionDataset v(std::vector<Transaction>{{1}, {1}});
  EXPECT_TRUE(HoldoutMethod(e, v, 0.9, 0.1).empty());
}

TEST(HoldoutMethodTest, UnanimousCandidateReported) {
  const TransactionDataset e(std::vector<Transaction>{{1}, {1}});
  const TransactionDataset v(std::vector<Transaction>(1000, Itemset{1}));
  const ItemsetCollection out = HoldoutMethod(e, v, 0.5, 0.1);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.FrequencyOf({1}), 1.0);
}

TEST(HoldoutMethodTest, InfrequentOnValidationNeverReported) {
  const TransactionDataset e(std::vector<Transaction>{{1}, {1}});
  std::vector<Transaction> vt;
  for (int i = 0; i < 100; ++i) vt.push_back(i < 49 ? Itemset{1} : Itemset{2});
  EXPECT_TRUE(HoldoutMethod(e, TransactionDataset(vt), 0.5, 0.1).empty());
  for (int k = 0; k <= 50; ++k) {
    EXPECT_GE(BinomialTailLog(k, 100, 0.5).p_value, 0.5);
  }
}

}  // namespace
}  // namespace tfi
