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

#ifndef TFI_FIM_H_
#define TFI_FIM_H_

#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "tfi/dataset.h"
#include "tfi/itemset.h"

namespace tfi {

// Itemsets with their frequencies (fractions of source_n transactions).
class ItemsetCollection {
 public:
  using Map = std::map<Itemset, double>;

  ItemsetCollection() = default;
  explicit ItemsetCollection(std::size_t source_n) : source_n_(source_n) {}

  // Throws ParameterError if the frequency is outside [0, 1].
  void Insert(const Itemset& itemset, double frequency);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool Contains(const Itemset& itemset) const {
    return entries_.count(itemset) > 0;
  }
  double FrequencyOf(const Itemset& itemset) const;
  std::size_t source_n() const { return source_n_; }
  const Map& entries() const { return entries_; }
  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  std::vector<Itemset> Itemsets() const;
  ItemsetCollection Filter(
      const std::function<bool(const Itemset&, double)>& keep) const;

 private:
  Map entries_;
  std::size_t source_n_ = 0;
};

// One itemset per line: sorted ids, a tab, the frequency with 6 decimals.
void WriteCollection(const ItemsetCollection& coll, std::ostream& out);

// Exact miner over weighted distinct transactions: every nonempty A with
// support(A) / total_weight >= min_fraction, where support sums the weights
// of the transactions containing A. Depth-first FP-growth.
std::vector<std::pair<Itemset, double>> MineWeighted(
    std::span<const WeightedTransaction> transactions, double total_weight,
    double min_fraction);

// FI(D, theta) for theta in (0, 1].
ItemsetCollection MineFrequent(const TransactionDataset& ds, double theta);

// { A nonempty : lo <= f_D(A) < hi }. hi above 1 means no upper cut.
ItemsetCollection FrequencyBand(const TransactionDataset& ds, double lo,
                                double hi);

// Minimal itemsets over `universe` not in `family`, where `family` must be
// downward-closed (the empty set is implicitly a member). Throws
// StructuralError otherwise.
std::vector<Itemset> NegativeBorder(const std::vector<Itemset>& family,
                                    std::span<const ItemId> universe);

bool IsAntichain(std::span<const Itemset> sets);

}  // namespace tfi

#endif  // TFI_FIM_H_
