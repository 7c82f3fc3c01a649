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

// Transaction data model: FIMI I/O, seeded splitting/resampling, and the
// structural statistics (d-index, length profile) that bound the empirical
// VC-dimension of itemset range sets.

#ifndef TFI_DATASET_H_
#define TFI_DATASET_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "tfi/itemset.h"

namespace tfi {

// A distinct transaction together with a non-negative weight: a multiplicity
// for datasets, a probability for ground-truth models.
struct WeightedTransaction {
  Transaction transaction;
  double weight = 0.0;
};

// A bag of transactions. Duplicates and empty transactions are kept.
class TransactionDataset {
 public:
  TransactionDataset() = default;
  explicit TransactionDataset(std::vector<Transaction> transactions);

  std::size_t size() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }
  const std::vector<Transaction>& transactions() const { return transactions_; }
  const Transaction& operator[](std::size_t i) const { return transactions_[i]; }
  // Sorted ids of every item occurring in some transaction.
  const std::vector<ItemId>& universe() const { return universe_; }

  // Distinct transactions with their multiplicities, in canonical order.
  std::vector<WeightedTransaction> Distinct() const;

 private:
  std::vector<Transaction> transactions_;
  std::vector<ItemId> universe_;
};

// Reads the FIMI text format: one transaction per line, items as
// whitespace-separated non-negative integers. Blank lines are skipped;
// repeated ids within a line collapse. Throws ParseError on a bad token.
TransactionDataset ParseFimi(std::istream& in);
void WriteFimi(const TransactionDataset& ds, std::ostream& out);

// f_D(A). Throws ParameterError on an empty dataset.
double Frequency(const TransactionDataset& ds, const Itemset& itemset);
// Number of transactions containing each itemset, one entry per input.
std::vector<std::uint64_t> SupportCounts(const TransactionDataset& ds,
                                         const std::vector<Itemset>& itemsets);

// Seeded Fisher-Yates shuffle, then the first ceil(fraction * n)
// transactions form the exploratory part and the rest the evaluation part.
std::pair<TransactionDataset, TransactionDataset> RandomSplit(
    const TransactionDataset& ds, double fraction_e, std::uint64_t seed);

// target_n draws uniformly with replacement from ds.
TransactionDataset Enlarge(const TransactionDataset& ds, std::size_t target_n,
                           std::uint64_t seed);

// Explicit distribution over a finite set of distinct transactions.
class GroundTruthModel {
 public:
  // Throws ModelError unless probabilities lie in [0, 1], sum to 1 within
  // 1e-9, and the transactions are pairwise distinct.
  explicit GroundTruthModel(std::vector<WeightedTransaction> support);

  const std::vector<WeightedTransaction>& support() const { return support_; }
  std::vector<ItemId> Universe() const;
  // t_pi(A): total probability of the transactions containing A.
  double TrueFrequency(const Itemset& itemset) const;

 private:
  std::vector<WeightedTransaction> support_;
};

TransactionDataset SampleFromModel(const GroundTruthModel& model,
                                   std::size_t n, std::uint64_t seed);

// Largest d such that the dataset holds at least d distinct transactions of
// length at least d. Upper-bounds the exact antichain d-index.
int DIndex(const TransactionDataset& ds);

struct LengthProfileEntry {
  int length = 0;
  // Distinct transactions of length >= `length`; an upper bound on the
  // largest antichain among them.
  int antichain_bound = 0;
  friend bool operator==(const LengthProfileEntry&,
                         const LengthProfileEntry&) = default;
};

// Entries in strictly decreasing length order. Length-zero transactions
// contain no nonempty itemset and are left out.
using LengthProfile = std::vector<LengthProfileEntry>;

LengthProfile ComputeLengthProfile(const TransactionDataset& ds);
// The d-index recovered from a profile; agrees with DIndex().
int DIndexFromProfile(const LengthProfile& profile);

// Derives independent seeds from a base seed (SplitMix64 finalizer).
std::uint64_t MixSeed(std::uint64_t base, std::uint64_t stream);

}  // namespace tfi

#endif  // TFI_DATASET_H_
