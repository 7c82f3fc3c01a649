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

#include "tfi/itemset.h"

#include <algorithm>

namespace tfi {

Itemset::Itemset(std::initializer_list<ItemId> items)
    : Itemset(std::vector<ItemId>(items)) {}

Itemset::Itemset(std::vector<ItemId> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool Itemset::Contains(ItemId item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::IsSubsetOf(const Itemset& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

Itemset Itemset::With(ItemId item) const {
  Itemset out;
  out.items_.reserve(items_.size() + 1);
  auto pos = std::lower_bound(items_.begin(), items_.end(), item);
  out.items_.assign(items_.begin(), pos);
  if (pos == items_.end() || *pos != item) out.items_.push_back(item);
  out.items_.insert(out.items_.end(), pos, items_.end());
  return out;
}

Itemset Itemset::Without(ItemId item) const {
  Itemset out;
  out.items_.reserve(items_.size());
  for (ItemId x : items_) {
    if (x != item) out.items_.push_back(x);
  }
  return out;
}

std::string Itemset::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(items_[i]);
  }
  return out;
}

std::size_t ItemsetHash::operator()(const Itemset& s) const {
  // FNV-1a over the item ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (ItemId x : s) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace tfi
