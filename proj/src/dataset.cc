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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "tfi/errors.h"

namespace tfi {

TransactionDataset::TransactionDataset(std::vector<Transaction> transactions)
    : transactions_(std::move(transactions)) {
  std::vector<ItemId> all;
  for (const Transaction& t : transactions_) {
    all.insert(all.end(), t.begin(), t.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  universe_ = std::move(all);
}

std::vector<WeightedTransaction> TransactionDataset::Distinct() const {
  std::map<Transaction, std::uint64_t> counts;
  for (const Transaction& t : transactions_) ++counts[t];
  std::vector<WeightedTransaction> out;
  out.reserve(counts.size());
  for (auto& [t, c] : counts) {
    out.push_back({t, static_cast<double>(c)});
  }
  return out;
}

namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

TransactionDataset ParseFimi(std::istream& in) {
  std::vector<Transaction> transactions;
  std::string line;
  std::size_t line_no = 0;
  std::vector<ItemId> items;
  while (std::getline(in, line)) {
    ++line_no;
    items.clear();
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && IsBlank(line[pos])) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !IsBlank(line[end])) ++end;
      const char* first = line.data() + pos;
      const char* last = line.data() + end;
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || *first == '+' || *first == '-' ||
          value > std::numeric_limits<ItemId>::max()) {
        throw ParseError("invalid item token '" + std::string(first, last) + "'",
                         line_no);
      }
      items.push_back(static_cast<ItemId>(value));
      pos = end;
    }
    if (!items.empty()) transactions.emplace_back(items);
  }
  return TransactionDataset(std::move(transactions));
}

void WriteFimi(const TransactionDataset& ds, std::ostream& out) {
  for (const Transaction& t : ds.transactions()) {
    out << t.ToString() << '\n';
  }
}

double Frequency(const TransactionDataset& ds, const Itemset& itemset) {
  if (ds.empty()) {
    throw ParameterError("frequency is undefined on an empty dataset");
  }
  std::size_t count = 0;
  for (const Transaction& t : ds.transactions()) {
    if (itemset.IsSubsetOf(t)) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(ds.size());
}

std::vector<std::uint64_t> SupportCounts(const TransactionDataset& ds,
                                         const std::vector<Itemset>& itemsets) {
  std::vector<std::uint64_t> counts(itemsets.size(), 0);
  if (itemsets.empty()) return counts;
  for (const WeightedTransaction& wt : ds.Distinct()) {
    const auto multiplicity = static_cast<std::uint64_t>(wt.weight);
    for (std::size_t i = 0; i < itemsets.size(); ++i) {
      if (itemsets[i].IsSubsetOf(wt.transaction)) counts[i] += multiplicity;
    }
  }
  return counts;
}

std::pair<TransactionDataset, TransactionDataset> RandomSplit(
    const TransactionDataset& ds, double fraction_e, std::uint64_t seed) {
  if (ds.size() < 2) {
    throw ParameterError("random split needs at least 2 transactions");
  }
  if (!(fraction_e > 0.0 && fraction_e < 1.0)) {
    throw ParameterError("split fraction must lie in (0, 1)");
  }
  const std::size_t n = ds.size();
  const auto cut = static_cast<std::size_t>(
      std::ceil(fraction_e * static_cast<double>(n)));
  if (cut == 0 || cut >= n) {
    throw ParameterError("split fraction leaves one part empty");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(order[i], order[pick(rng)]);
  }
  std::vector<Transaction> exploratory;
  std::vector<Transaction> evaluation;
  exploratory.reserve(cut);
  evaluation.reserve(n - cut);
  for (std::size_t i = 0; i < n; ++i) {
    (i < cut ? exploratory : evaluation).push_back(ds[order[i]]);
  }
  return {TransactionDataset(std::move(exploratory)),
          TransactionDataset(std::move(evaluation))};
}

TransactionDataset Enlarge(const TransactionDataset& ds, std::size_t target_n,
                           std::uint64_t seed) {
  if (ds.empty()) throw ParameterError("cannot enlarge an empty dataset");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
  std::vector<Transaction> out;
  out.reserve(target_n);
  for (std::size_t i = 0; i < target_n; ++i) out.push_back(ds[pick(rng)]);
  return TransactionDataset(std::move(out));
}

GroundTruthModel::GroundTruthModel(std::vector<WeightedTransaction> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw ModelError("ground-truth model has no support");
  double total = 0.0;
  std::set<Transaction> seen;
  for (const WeightedTransaction& wt : support_) {
    if (!(wt.weight >= 0.0 && wt.weight <= 1.0)) {
      throw ModelError("probability outside [0, 1] for transaction {" +
                       wt.transaction.ToString() + "}");
    }
    if (!seen.insert(wt.transaction).second) {
      throw ModelError("duplicate transaction {" + wt.transaction.ToString() +
                       "} in model support");
    }
    total += wt.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ModelError("probabilities sum to " + std::to_string(total) +
                     ", expected 1");
  }
}

std::vector<ItemId> GroundTruthModel::Universe() const {
  std::set<ItemId> items;
  for (const WeightedTransaction& wt : support_) {
    items.insert(wt.transaction.begin(), wt.transaction.end());
  }
  return {items.begin(), items.end()};
}

double GroundTruthModel::TrueFrequency(const Itemset& itemset) const {
  double total = 0.0;
  for (const WeightedTransaction& wt : support_) {
    if (itemset.IsSubsetOf(wt.transaction)) total += wt.weight;
  }
  return total;
}

TransactionDataset SampleFromModel(const GroundTruthModel& model,
                                   std::size_t n, std::uint64_t seed) {
  std::vector<double> weights;
  weights.reserve(model.support().size());
  for (const WeightedTransaction& wt : model.support()) {
    weights.push_back(wt.weight);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::mt19937_64 rng(seed);
  std::vector<Transaction> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(model.support()[pick(rng)].transaction);
  }
  return TransactionDataset(std::move(out));
}

namespace {

// Lengths of the distinct transactions, longest first.
std::vector<int> DistinctLengthsDescending(const TransactionDataset& ds) {
  std::set<Transaction> distinct(ds.transactions().begin(),
                                 ds.transactions().end());
  std::vector<int> lengths;
  lengths.reserve(distinct.size());
  for (const Transaction& t : distinct) {
    lengths.push_back(static_cast<int>(t.size()));
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

}  // namespace

int DIndex(const TransactionDataset& ds) {
  const std::vector<int> lengths = DistinctLengthsDescending(ds);
  int d = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] >= static_cast<int>(i) + 1) d = static_cast<int>(i) + 1;
  }
  return d;
}

LengthProfile ComputeLengthProfile(const TransactionDataset& ds) {
  if (ds.empty()) {
    throw ParameterError("length profile of an empty dataset");
  }
  const std::vector<int> lengths = DistinctLengthsDescending(ds);
  LengthProfile profile;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] == 0) break;
    const int count = static_cast<int>(i) + 1;
    if (profile.empty() || profile.back().length != lengths[i]) {
      profile.push_back({lengths[i], count});
    } else {
      profile.back().antichain_bound = count;
    }
  }
  return profile;
}

int DIndexFromProfile(const LengthProfile& profile) {
  // For d between consecutive lengths, the count of transactions of length
  // >= d is the bound of the shortest entry whose length is >= d.
  int d = 0;
  for (const LengthProfileEntry& e : profile) {
    d = std::max(d, std::min(e.length, e.antichain_bound));
  }
  return d;
}

std::uint64_t MixSeed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace tfi
