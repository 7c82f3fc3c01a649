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

#ifndef TFI_ITEMSET_H_
#define TFI_ITEMSET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tfi {

using ItemId = std::uint32_t;

// A finite set of items kept as a sorted, duplicate-free vector. The same
// type is used for transactions and for itemsets; the ordering is
// lexicographic on the sorted ids, which gives a canonical form for maps and
// hashing.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<ItemId> items);
  // Sorts and deduplicates.
  explicit Itemset(std::vector<ItemId> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::span<const ItemId> items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  ItemId back() const { return items_.back(); }

  bool Contains(ItemId item) const;
  bool IsSubsetOf(const Itemset& other) const;
  bool IsProperSubsetOf(const Itemset& other) const {
    return size() < other.size() && IsSubsetOf(other);
  }

  Itemset With(ItemId item) const;
  Itemset Without(ItemId item) const;

  // Space-separated ids, e.g. "1 2 3". The empty set renders as "".
  std::string ToString() const;

  friend auto operator<=>(const Itemset&, const Itemset&) = default;
  friend bool operator==(const Itemset&, const Itemset&) = default;

 private:
  std::vector<ItemId> items_;
};

using Transaction = Itemset;

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const;
};

}  // namespace tfi

#endif  // TFI_ITEMSET_H_
