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

#include "tfi/dataset.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.h"
#include "tfi/errors.h"

namespace tfi {
namespace {

TransactionDataset Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseFimi(in);
}

TEST(ParseFimiTest, ReadsTransactionsAndUniverse) {
  const TransactionDataset ds = Parse("1 2 3\n2 3\n");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0], Itemset({1, 2, 3}));
  EXPECT_EQ(ds[1], Itemset({2, 3}));
  EXPECT_EQ(ds.universe(), (std::vector<ItemId>{1, 2, 3}));
}

TEST(ParseFimiTest, EmptyStreamIsEmptyDataset) {
  EXPECT_TRUE(Parse("").empty());
}

TEST(ParseFimiTest, RepeatedItemsCollapse) {
  const TransactionDataset ds = Parse("5 5 7\n");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0], Itemset({5, 7}));
}

TEST(ParseFimiTest, ToleratesCarriageReturnsAndBlankLines) {
  const TransactionDataset ds = Parse("1 2\r\n\n  \n3\t4\n");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[1], Itemset({3, 4}));
}

TEST(ParseFimiTest, BadTokenReportsLine) {
  try {
    Parse("1 2\n3 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(Parse("-1\n"), ParseError);
  EXPECT_THROW(Parse("99999999999999999999\n"), ParseError);
}

TEST(ParseFimiTest, WriteRoundTrips) {
  const TransactionDataset ds = Parse("3 1\n2\n1 2 3\n");
  std::ostringstream out;
  WriteFimi(ds, out);
  EXPECT_EQ(out.str(), "1 3\n2\n1 2 3\n");
  EXPECT_EQ(Parse(out.str()).transactions(), ds.transactions());
}

TEST(FrequencyTest, CountsContainingTransactions) {
  const TransactionDataset ds(std::vector<Transaction>{{1, 2}, {1}, {1, 2, 3}});
  EXPECT_DOUBLE_EQ(Frequency(ds, {1, 2}), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(Frequency(ds, {}), 1.0);
  EXPECT_DOUBLE_EQ(Frequency(TransactionDataset(std::vector<Transaction>{{1}, {2}}), {3}), 0.0);
  EXPECT_THROW(Frequency(TransactionDataset(), {1}), ParameterError);
}

TEST(SupportCountsTest, OnePerItemset) {
  const TransactionDataset ds(std::vector<Transaction>{{1, 2}, {1}, {1, 2, 3}});
  EXPECT_EQ(SupportCounts(ds, {{1}, {2, 3}, {4}}),
            (std::vector<std::uint64_t>{3, 1, 0}));
}

TEST(RandomSplitTest, CeilingCutRule) {
  std::vector<Transaction> ts;
  for (ItemId i = 0; i < 10; ++i) ts.push_back({i});
  const TransactionDataset ten(ts);
  auto [a, b] = RandomSplit(ten, 0.5, 7);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_EQ(b.size(), 5u);

  const TransactionDataset three(std::vector<Transaction>{{1}, {2}, {3}});
  auto [c, d] = RandomSplit(three, 0.5, 7);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(d.size(), 1u);
}

TEST(RandomSplitTest, DeterministicPartition) {
  std::vector<Transaction> ts;
  for (ItemId i = 0; i < 50; ++i) ts.push_back({i});
  const TransactionDataset ds(ts);
  auto [a1, b1] = RandomSplit(ds, 0.3, 11);
  auto [a2, b2] = RandomSplit(ds, 0.3, 11);
  EXPECT_EQ(a1.transactions(), a2.transactions());
  EXPECT_EQ(b1.transactions(), b2.transactions());
  std::multiset<Transaction> all(a1.transactions().begin(),
                                 a1.transactions().end());
  all.insert(b1.transactions().begin(), b1.transactions().end());
  EXPECT_EQ(all, std::multiset<Transaction>(ts.begin(), ts.end()));
}

TEST(RandomSplitTest, RejectsTinyOrBadFraction) {
  EXPECT_THROW(RandomSplit(TransactionDataset(std::vector<Transaction>{{1}}), 0.5, 1), ParameterError);
  const TransactionDataset two(std::vector<Transaction>{{1}, {2}});
  EXPECT_THROW(RandomSplit(two, 0.0, 1), ParameterError);
  EXPECT_THROW(RandomSplit(two, 1.0, 1), ParameterError);
}

TEST(EnlargeTest, PreservesSupport) {
  const TransactionDataset ds(std::vector<Transaction>{{1, 2}, {3}});
  const TransactionDataset big = Enlarge(ds, 5, 3);
  ASSERT_EQ(big.size(), 5u);
  for (const Transaction& t : big.transactions()) {
    EXPECT_TRUE(t == ds[0] || t == ds[1]);
  }
  EXPECT_EQ(Enlarge(ds, 2, 9).size(), 2u);
  const TransactionDataset ones = Enlarge(TransactionDataset(std::vector<Transaction>{{1}}), 4, 5);
  EXPECT_EQ(ones.transactions(), std::vector<Transaction>(4, Itemset{1}));
  EXPECT_THROW(Enlarge(TransactionDataset(), 4, 5), ParameterError);
}

TEST(GroundTruthModelTest, ValidatesDistribution) {
  EXPECT_THROW(GroundTruthModel({{{1}, 0.5}, {{2}, 0.4}}), ModelError);
  EXPECT_THROW(GroundTruthModel({{{1}, 0.5}, {{1}, 0.5}}), ModelError);
  EXPECT_THROW(GroundTruthModel({{{1}, 1.5}, {{2}, -0.5}}), ModelError);
  EXPECT_THROW(GroundTruthModel({}), ModelError);
  const GroundTruthModel gt({{{1, 2}, 0.6}, {{3}, 0.4}});
  EXPECT_DOUBLE_EQ(gt.TrueFrequency({1}), 0.6);
  EXPECT_DOUBLE_EQ(gt.TrueFrequency({3}), 0.4);
  EXPECT_DOUBLE_EQ(gt.TrueFrequency({1, 3}), 0.0);
  EXPECT_EQ(gt.Universe(), (std::vector<ItemId>{1, 2, 3}));
}

TEST(SampleFromModelTest, PointMassAndConcentration) {
  const GroundTruthModel point({{{1}, 1.0}});
  EXPECT_EQ(SampleFromModel(point, 3, 1).transactions(),
            std::vector<Transaction>(3, Itemset{1}));
  EXPECT_TRUE(SampleFromModel(point, 0, 1).empty());

  const GroundTruthModel fair({{{1}, 0.5}, {{2}, 0.5}});
  const TransactionDataset ds = SampleFromModel(fair, 10000, 42);
  EXPECT_NEAR(Frequency(ds, {1}), 0.5, 0.02);
  EXPECT_EQ(SampleFromModel(fair, 100, 42).transactions(),
            SampleFromModel(fair, 100, 42).transactions());
}

TEST(DIndexTest, Examples) {
  EXPECT_EQ(DIndex(TransactionDataset(std::vector<Transaction>{{1, 2, 3}, {4, 5}, {6}})), 2);
  EXPECT_EQ(DIndex(TransactionDataset(std::vector<Transaction>{{1}})), 1);
  EXPECT_EQ(DIndex(TransactionDataset(std::vector<Transaction>{{1, 2}, {1, 2}, {1, 2}})), 1);
  EXPECT_EQ(DIndex(TransactionDataset(std::vector<Transaction>{{}})), 0);
}

TEST(DIndexTest, UpperBoundsExhaustiveAntichainIndex) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const auto ts = oracle::RandomTransactions(rng, 1 + round % 7, 6, 0.5);
    const TransactionDataset ds(ts);
    const int d = DIndex(ds);
    EXPECT_GE(d, oracle::DIndex(ts));
    EXPECT_EQ(d, DIndexFromProfile(ComputeLengthProfile(ds)));
  }
}

TEST(LengthProfileTest, Examples) {
  EXPECT_EQ(ComputeLengthProfile(TransactionDataset(std::vector<Transaction>{{1, 2, 3}, {1, 2}, {4}})),
            (LengthProfile{{3, 1}, {2, 2}, {1, 3}}));
  EXPECT_EQ(ComputeLengthProfile(TransactionDataset(std::vector<Transaction>{{1}})),
            (LengthProfile{{1, 1}}));
  EXPECT_EQ(ComputeLengthProfile(TransactionDataset(std::vector<Transaction>{{1, 2}, {1, 2}})),
            (LengthProfile{{2, 1}}));
  EXPECT_THROW(ComputeLengthProfile(TransactionDataset()), ParameterError);
}

TEST(MixSeedTest, SpreadsStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(MixSeed(1, s));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(MixSeed(3, 4), MixSeed(3, 4));
  EXPECT_NE(MixSeed(3, 4), MixSeed(4, 3));
}

}  // namespace
}  // namespace tfi
