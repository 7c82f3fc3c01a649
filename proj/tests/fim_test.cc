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

#include "tfi/fim.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.h"
#include "tfi/errors.h"

namespace tfi {
namespace {

std::map<Itemset, double> AsMap(const ItemsetCollection& c) {
  return {c.begin(), c.end()};
}

TEST(MineFrequentTest, SmallExamples) {
  const TransactionDataset ds(std::vector<Transaction>{{1, 2}, {1}, {2}});
  EXPECT_EQ(AsMap(MineFrequent(ds, 0.6)),
            (std::map<Itemset, double>{{{1}, 2.0 / 3}, {{2}, 2.0 / 3}}));

  const ItemsetCollection all =
      MineFrequent(TransactionDataset(std::vector<Transaction>{{1, 2}, {1, 2}}), 1.0);
  EXPECT_EQ(all.Itemsets(), (std::vector<Itemset>{{1}, {1, 2}, {2}}));
  for (const auto& [a, f] : all) EXPECT_EQ(f, 1.0);

  EXPECT_EQ(AsMap(MineFrequent(TransactionDataset(std::vector<Transaction>{{1}}), 0.5)),
            (std::map<Itemset, double>{{{1}, 1.0}}));
}

TEST(MineFrequentTest, RejectsBadThreshold) {
  const TransactionDataset ds(std::vector<Transaction>{{1}});
  EXPECT_THROW(MineFrequent(ds, 0.0), ParameterError);
  EXPECT_THROW(MineFrequent(ds, 1.5), ParameterError);
  EXPECT_THROW(MineFrequent(TransactionDataset(), 0.5), ParameterError);
}

TEST(MineFrequentTest, MatchesEnumeration) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> theta(0.05, 1.0);
  for (int round = 0; round < 60; ++round) {
    const auto ts = oracle::RandomTransactions(rng, 1 + round % 25, 8, 0.45);
    const double t = theta(rng);
    const auto expected = oracle::Frequent(ts, t);
    const auto got = AsMap(MineFrequent(TransactionDataset(ts), t));
    ASSERT_EQ(got.size(), expected.size()) << "round " << round;
    for (const auto& [a, f] : expected) {
      ASSERT_TRUE(got.count(a)) << a.ToString();
      EXPECT_NEAR(got.at(a), f, 1e-12);
    }
  }
}

TEST(MineWeightedTest, UsesWeights) {
  const std::vector<WeightedTransaction> wts = {{{1, 2}, 0.6}, {{3}, 0.4}};
  const auto mined = MineWeighted(wts, 1.0, 0.5);
  std::set<Itemset> sets;
  for (const auto& [a, f] : mined) sets.insert(a);
  EXPECT_EQ(sets, (std::set<Itemset>{{1}, {2}, {1, 2}}));
}

TEST(FrequencyBandTest, Examples) {
  const TransactionDataset ds(std::vector<Transaction>{{1, 2}, {1}, {2}});
  EXPECT_EQ(AsMap(FrequencyBand(ds, 0.3, 0.5)),
            (std::map<Itemset, double>{{{1, 2}, 1.0 / 3}}));
  EXPECT_TRUE(FrequencyBand(ds, 0.4, 0.4).empty());
  EXPECT_EQ(FrequencyBand(ds, 0.6, 2.0).Itemsets(),
            (std::vector<Itemset>{{1}, {2}}));
  EXPECT_THROW(FrequencyBand(ds, 0.0, 0.5), ParameterError);
}

TEST(NegativeBorderTest, Examples) {
  const std::vector<ItemId> u3 = {1, 2, 3};
  EXPECT_EQ(NegativeBorder({{1}, {2}}, u3),
            (std::vector<Itemset>{{1, 2}, {3}}));
  EXPECT_EQ(NegativeBorder({}, std::vector<ItemId>{1, 2}),
            (std::vector<Itemset>{{1}, {2}}));
  EXPECT_TRUE(
      NegativeBorder({{1}, {2}, {1, 2}}, std::vector<ItemId>{1, 2}).empty());
}

TEST(NegativeBorderTest, RejectsNonDownwardClosed) {
  EXPECT_THROW(NegativeBorder({{1, 2}}, std::vector<ItemId>{1, 2}),
               StructuralError);
}

TEST(NegativeBorderTest, MatchesEnumeration) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    const auto ts = oracle::RandomTransactions(rng, 2 + round % 10, 7, 0.5);
    const TransactionDataset ds(ts);
    if (ds.universe().empty()) continue;
    const std::vector<Itemset> fam = MineFrequent(ds, 0.3).Itemsets();
    const auto got = NegativeBorder(fam, ds.universe());
    const auto want = oracle::NegativeBorder(
        std::set<Itemset>(fam.begin(), fam.end()), ds.universe());
    EXPECT_EQ(std::set<Itemset>(got.begin(), got.end()), want);
    EXPECT_TRUE(IsAntichain(got));
  }
}

TEST(IsAntichainTest, Examples) {
  const std::vector<Itemset> a = {{1}, {2, 3}};
  const std::vector<Itemset> b = {{1}, {1, 2}};
  const std::vector<Itemset> dup = {{1}, {1}};
  EXPECT_TRUE(IsAntichain(a));
  EXPECT_FALSE(IsAntichain(b));
  EXPECT_TRUE(IsAntichain(std::vector<Itemset>{}));
  EXPECT_FALSE(IsAntichain(dup));
}

TEST(ItemsetCollectionTest, InsertValidatesAndWrites) {
  ItemsetCollection c(4);
  c.Insert({2, 1}, 0.5);
  c.Insert({3}, 0.25);
  EXPECT_THROW(c.Insert({4}, 1.5), ParameterError);
  EXPECT_TRUE(c.Contains({1, 2}));
  EXPECT_DOUBLE_EQ(c.FrequencyOf({3}), 0.25);
  std::ostringstream out;
  WriteCollection(c, out);
  EXPECT_EQ(out.str(), "1 2\t0.500000\n3\t0.250000\n");
}

}  // namespace
}  // namespace tfi
