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

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "tfi/errors.h"

namespace tfi {

void ItemsetCollection::Insert(const Itemset& itemset, double frequency) {
  if (!(frequency >= 0.0 && frequency <= 1.0)) {
    throw ParameterError("frequency outside [0, 1] for {" +
                         itemset.ToString() + "}");
  }
  entries_[itemset] = frequency;
}

double ItemsetCollection::FrequencyOf(const Itemset& itemset) const {
  auto it = entries_.find(itemset);
  if (it == entries_.end()) {
    throw ParameterError("itemset {" + itemset.ToString() +
                         "} not in collection");
  }
  return it->second;
}

std::vector<Itemset> ItemsetCollection::Itemsets() const {
  std::vector<Itemset> out;
  out.reserve(entries_.size());
  for (const auto& [itemset, freq] : entries_) out.push_back(itemset);
  return out;
}

ItemsetCollection ItemsetCollection::Filter(
    const std::function<bool(const Itemset&, double)>& keep) const {
  ItemsetCollection out(source_n_);
  for (const auto& [itemset, freq] : entries_) {
    if (keep(itemset, freq)) out.entries_.emplace_hint(out.entries_.end(),
                                                        itemset, freq);
  }
  return out;
}

void WriteCollection(const ItemsetCollection& coll, std::ostream& out) {
  char buf[32];
  for (const auto& [itemset, freq] : coll) {
    std::snprintf(buf, sizeof(buf), "%.6f", freq);
    out << itemset.ToString() << '\t' << buf << '\n';
  }
}

namespace {

// FP-tree over item ranks; rank 0 is the most frequent item.
class FpTree {
 public:
  explicit FpTree(std::size_t num_ranks)
      : head_(num_ranks, -1), rank_weight_(num_ranks, 0.0) {
    nodes_.push_back({-1, 0.0, -1, -1, -1, -1});
  }

  // `ranks` must be sorted ascending.
  void Insert(std::span<const int> ranks, double weight) {
    int cur = 0;
    for (int r : ranks) {
      int child = nodes_[cur].first_child;
      while (child != -1 && nodes_[child].rank != r) {
        child = nodes_[child].next_sibling;
      }
      if (child == -1) {
        child = static_cast<int>(nodes_.size());
        nodes_.push_back({r, 0.0, cur, -1, nodes_[cur].first_child, head_[r]});
        nodes_[cur].first_child = child;
        head_[r] = child;
      }
      nodes_[child].weight += weight;
      rank_weight_[r] += weight;
      cur = child;
    }
  }

  std::size_t num_ranks() const { return head_.size(); }
  double RankWeight(int r) const { return rank_weight_[r]; }

  // Prefix paths (ranks above `r`, root-most first) of every node of rank r.
  template <typename Fn>
  void ForEachPrefixPath(int r, Fn&& fn) const {
    std::vector<int> path;
    for (int node = head_[r]; node != -1; node = nodes_[node].next_same_rank) {
      path.clear();
      for (int p = nodes_[node].parent; p > 0; p = nodes_[p].parent) {
        path.push_back(nodes_[p].rank);
      }
      std::reverse(path.begin(), path.end());
      fn(std::span<const int>(path), nodes_[node].weight);
    }
  }

 private:
  struct Node {
    int rank;
    double weight;
    int parent;
    int first_child;
    int next_sibling;
    int next_same_rank;
  };
  std::vector<Node> nodes_;
  std::vector<int> head_;
  std::vector<double> rank_weight_;
};

struct PathBase {
  std::vector<int> ranks;  // in the parent tree's rank space
  double weight;
};

class FpGrowth {
 public:
  FpGrowth(double total_weight, double min_fraction)
      : total_(total_weight), min_fraction_(min_fraction) {}

  bool Frequent(double weight) const {
    return weight > 0.0 && weight / total_ >= min_fraction_;
  }

  // Builds a tree from `base` (paths over `items`, indexed by parent rank)
  // restricted to frequent items, then mines it under `prefix`.
  void MineBase(const std::vector<PathBase>& base,
                const std::vector<ItemId>& items, std::vector<ItemId>& prefix,
                std::vector<std::pair<Itemset, double>>& out) {
    std::vector<double> weight(items.size(), 0.0);
    for (const PathBase& p : base) {
      for (int r : p.ranks) weight[r] += p.weight;
    }
    std::vector<int> order;
    for (std::size_t r = 0; r < items.size(); ++r) {
      if (Frequent(weight[r])) order.push_back(static_cast<int>(r));
    }
    if (order.empty()) return;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return weight[a] > weight[b];
    });
    std::vector<int> new_rank(items.size(), -1);
    std::vector<ItemId> new_items(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      new_rank[order[i]] = static_cast<int>(i);
      new_items[i] = items[order[i]];
    }
    FpTree tree(order.size());
    std::vector<int> ranks;
    for (const PathBase& p : base) {
      ranks.clear();
      for (int r : p.ranks) {
        if (new_rank[r] >= 0) ranks.push_back(new_rank[r]);
      }
      if (ranks.empty()) continue;
      std::sort(ranks.begin(), ranks.end());
      tree.Insert(ranks, p.weight);
    }
    MineTree(tree, new_items, prefix, out);
  }

 private:
  void MineTree(const FpTree& tree, const std::vector<ItemId>& items,
                std::vector<ItemId>& prefix,
                std::vector<std::pair<Itemset, double>>& out) {
    for (int r = static_cast<int>(tree.num_ranks()) - 1; r >= 0; --r) {
      const double w = tree.RankWeight(r);
      if (!Frequent(w)) continue;
      prefix.push_back(items[r]);
      out.emplace_back(Itemset(prefix), w / total_);
      std::vector<PathBase> base;
      tree.ForEachPrefixPath(r, [&](std::span<const int> path, double pw) {
        if (!path.empty()) base.push_back({{path.begin(), path.end()}, pw});
      });
      if (!base.empty()) MineBase(base, items, prefix, out);
      prefix.pop_back();
    }
  }

  double total_;
  double min_fraction_;
};

}  // namespace

std::vector<std::pair<Itemset, double>> MineWeighted(
    std::span<const WeightedTransaction> transactions, double total_weight,
    double min_fraction) {
  if (!(min_fraction > 0.0)) {
    throw ParameterError("mining threshold must be positive");
  }
  if (!(total_weight > 0.0)) {
    throw ParameterError("mining needs a positive total weight");
  }
  std::vector<std::pair<Itemset, double>> out;
  std::vector<ItemId> items;
  for (const WeightedTransaction& wt : transactions) {
    items.insert(items.end(), wt.transaction.begin(), wt.transaction.end());
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());

  std::vector<PathBase> base;
  base.reserve(transactions.size());
  for (const WeightedTransaction& wt : transactions) {
    if (wt.transaction.empty() || wt.weight <= 0.0) continue;
    PathBase p{{}, wt.weight};
    for (ItemId x : wt.transaction) {
      p.ranks.push_back(static_cast<int>(
          std::lower_bound(items.begin(), items.end(), x) - items.begin()));
    }
    base.push_back(std::move(p));
  }
  FpGrowth miner(total_weight, min_fraction);
  std::vector<ItemId> prefix;
  miner.MineBase(base, items, prefix, out);
  return out;
}

namespace {

ItemsetCollection MineAt(const TransactionDataset& ds, double threshold) {
  ItemsetCollection coll(ds.size());
  const std::vector<WeightedTransaction> distinct = ds.Distinct();
  for (auto& [itemset, freq] :
       MineWeighted(distinct, static_cast<double>(ds.size()), threshold)) {
    coll.Insert(itemset, std::min(freq, 1.0));
  }
  return coll;
}

}  // namespace

ItemsetCollection MineFrequent(const TransactionDataset& ds, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw ParameterError("theta must lie in (0, 1]");
  }
  if (ds.empty()) throw ParameterError("cannot mine an empty dataset");
  return MineAt(ds, theta);
}

ItemsetCollection FrequencyBand(const TransactionDataset& ds, double lo,
                                double hi) {
  if (!(lo > 0.0)) throw ParameterError("band lower end must be positive");
  if (hi < lo) throw ParameterError("band upper end below lower end");
  if (ds.empty()) throw ParameterError("cannot mine an empty dataset");
  if (lo > 1.0) return ItemsetCollection(ds.size());
  return MineAt(ds, lo).Filter(
      [hi](const Itemset&, double f) { return f < hi; });
}

std::vector<Itemset> NegativeBorder(const std::vector<Itemset>& family,
                                    std::span<const ItemId> universe) {
  std::unordered_set<Itemset, ItemsetHash> members;
  for (const Itemset& a : family) {
    if (!a.empty()) members.insert(a);
  }
  auto is_member = [&](const Itemset& a) {
    return a.empty() || members.count(a) > 0;
  };
  for (const Itemset& a : members) {
    for (ItemId x : a) {
      if (!is_member(a.Without(x))) {
        throw StructuralError("family is not downward-closed: {" +
                              a.ToString() + "} lacks subset {" +
                              a.Without(x).ToString() + "}");
      }
    }
  }
  std::vector<ItemId> items(universe.begin(), universe.end());
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());

  std::vector<Itemset> border;
  for (ItemId x : items) {
    Itemset single{x};
    if (!is_member(single)) border.push_back(std::move(single));
  }
  // Every border set of size >= 2 is its largest item added to a member.
  for (const Itemset& a : members) {
    auto from = std::upper_bound(items.begin(), items.end(), a.back());
    for (auto it = from; it != items.end(); ++it) {
      Itemset candidate = a.With(*it);
      if (is_member(candidate)) continue;
      bool minimal = true;
      for (ItemId y : a) {
        if (!is_member(candidate.Without(y))) {
          minimal = false;
          break;
        }
      }
      if (minimal) border.push_back(std::move(candidate));
    }
  }
  std::sort(border.begin(), border.end());
  return border;
}

bool IsAntichain(std::span<const Itemset> sets) {
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sets[a].size() < sets[b].size();
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (sets[order[i]].IsSubsetOf(sets[order[j]])) return false;
    }
  }
  return true;
}

}  // namespace tfi
