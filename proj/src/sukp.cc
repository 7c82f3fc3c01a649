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

#include "tfi/sukp.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "tfi/errors.h"

namespace tfi {

SukpInstance BuildSukpInstance(const std::vector<Itemset>& coll,
                               long long capacity) {
  if (coll.empty()) {
    throw ParameterError("cannot build a SUKP from an empty collection");
  }
  if (capacity < 0) throw ParameterError("SUKP capacity must be >= 0");
  SukpInstance inst;
  for (const Itemset& a : coll) {
    inst.elements.insert(inst.elements.end(), a.begin(), a.end());
  }
  std::sort(inst.elements.begin(), inst.elements.end());
  inst.elements.erase(std::unique(inst.elements.begin(), inst.elements.end()),
                      inst.elements.end());
  inst.subsets = coll;
  inst.profits.assign(coll.size(), 1.0);
  inst.weights.assign(inst.elements.size(), 1.0);
  inst.capacity = static_cast<double>(capacity);
  return inst;
}

int Log2Bound(long long q) {
  if (q <= 0) return 0;
  return static_cast<int>(std::bit_width(static_cast<unsigned long long>(q)));
}

namespace {

using Word = std::uint64_t;

constexpr long long kNoLimit = std::numeric_limits<long long>::max();

struct WordsHash {
  std::size_t operator()(const std::vector<Word>& w) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Word x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Branch-and-bound over the items of the union. A node fixes a set of
// chosen items (|chosen| <= capacity) and a set of excluded items; the
// members inside `chosen` are already covered, the candidates are the
// members that could still become covered.
class UnitSukpSolver {
 public:
  UnitSukpSolver(const SukpInstance& inst, bool antichain,
                 const SukpOptions& opts)
      : antichain_(antichain), node_limit_(opts.node_limit) {
    if (inst.profits.size() != inst.subsets.size() ||
        inst.weights.size() != inst.elements.size()) {
      throw ParameterError("SUKP profits/weights do not match the instance");
    }
    for (double p : inst.profits) {
      if (p != 1.0) throw ParameterError("only unit profits are supported");
    }
    for (double w : inst.weights) {
      if (w != 1.0) throw ParameterError("only unit weights are supported");
    }
    if (!(inst.capacity >= 0.0)) {
      throw ParameterError("SUKP capacity must be >= 0");
    }
    num_elements_ = static_cast<int>(inst.elements.size());
    capacity_ = static_cast<int>(
        std::min(std::floor(inst.capacity), static_cast<double>(num_elements_)));
    words_ = std::max(1, (num_elements_ + 63) / 64);
    std::vector<ItemId> elements = inst.elements;
    std::sort(elements.begin(), elements.end());
    std::vector<Word> bits(words_);
    for (std::size_t i = 0; i < inst.subsets.size(); ++i) {
      const Itemset& s = inst.subsets[i];
      if (static_cast<int>(s.size()) > capacity_) continue;
      std::fill(bits.begin(), bits.end(), 0);
      for (ItemId x : s) {
        auto it = std::lower_bound(elements.begin(), elements.end(), x);
        if (it == elements.end() || *it != x) {
          throw ParameterError("subset {" + s.ToString() +
                               "} is not contained in the SUKP elements");
        }
        const auto e = static_cast<std::size_t>(it - elements.begin());
        bits[e / 64] |= Word{1} << (e % 64);
      }
      bits_.insert(bits_.end(), bits.begin(), bits.end());
      size_.push_back(static_cast<int>(s.size()));
      original_.push_back(i);
    }
    std::vector<Itemset> kept;
    for (std::size_t i : original_) kept.push_back(inst.subsets[i]);
    std::sort(kept.begin(), kept.end());
    distinct_ = std::adjacent_find(kept.begin(), kept.end()) == kept.end();

    std::vector<Word> union_bits(words_, 0);
    for (int m = 0; m < NumMembers(); ++m) {
      for (int w = 0; w < words_; ++w) union_bits[w] |= Bits(m)[w];
    }
    union_size_ = 0;
    for (Word w : union_bits) union_size_ += std::popcount(w);
    binom_cache_.assign(static_cast<std::size_t>(capacity_) + 2, {});
  }

  int NumMembers() const { return static_cast<int>(size_.size()); }

  struct Outcome {
    long long best = 0;
    std::vector<int> selection;
  };

  // Explores every node whose bound reaches max(best + 1, prune_below) and
  // stops once best >= stop_at.
  Outcome Run(long long stop_at, long long prune_below) {
    best_ = -1;
    best_selection_.clear();
    stop_at_ = stop_at;
    prune_below_ = prune_below;
    stopped_ = false;
    nodes_ = 0;

    std::vector<int> inside;
    std::vector<int> cand;
    for (int m = 0; m < NumMembers(); ++m) {
      (size_[m] == 0 ? inside : cand).push_back(m);
    }
    if (capacity_ >= union_size_) {
      inside.insert(inside.end(), cand.begin(), cand.end());
      cand.clear();
    }
    std::vector<Word> chosen(words_, 0);
    Dfs(chosen, 0, inside, cand);
    return {std::max<long long>(best_, 0), best_selection_};
  }

  long long RootUpperBound() {
    std::vector<int> inside;
    std::vector<int> cand;
    for (int m = 0; m < NumMembers(); ++m) {
      (size_[m] == 0 ? inside : cand).push_back(m);
    }
    if (capacity_ >= union_size_) {
      inside.insert(inside.end(), cand.begin(), cand.end());
      return antichain_ ? static_cast<long long>(MaxAntichain(inside).size())
                        : static_cast<long long>(inside.size());
    }
    std::vector<Word> chosen(words_, 0);
    return UpperBound(chosen, 0, inside, cand, kNoLimit);
  }

  std::vector<std::size_t> ToOriginal(const std::vector<int>& sel) const {
    std::vector<std::size_t> out;
    out.reserve(sel.size());
    for (int m : sel) out.push_back(original_[m]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const Word* Bits(int m) const {
    return bits_.data() + static_cast<std::size_t>(m) * words_;
  }

  int NewCount(int m, const std::vector<Word>& chosen) const {
    const Word* b = Bits(m);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(b[w] & ~chosen[w]);
    return c;
  }

  bool Precedes(int a, int b) const {
    // Strict order used for antichains: proper inclusion, with equal sets
    // ordered by index so duplicates count as comparable.
    if (size_[a] > size_[b]) return false;
    const Word* x = Bits(a);
    const Word* y = Bits(b);
    for (int w = 0; w < words_; ++w) {
      if (x[w] & ~y[w]) return false;
    }
    return size_[a] < size_[b] || a < b;
  }

  // Maximum antichain of `ids` via Dilworth/Koenig on the comparability
  // bipartite graph (Hopcroft-Karp matching).
  std::vector<int> MaxAntichain(const std::vector<int>& ids) const {
    const int k = static_cast<int>(ids.size());
    if (k <= 1) return ids;
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j && Precedes(ids[i], ids[j])) adj[i].push_back(j);
      }
    }
    std::vector<int> match_l(k, -1);
    std::vector<int> match_r(k, -1);
    std::vector<int> dist(k);
    auto bfs = [&]() {
      std::queue<int> q;
      bool found = false;
      for (int u = 0; u < k; ++u) {
        if (match_l[u] == -1) {
          dist[u] = 0;
          q.push(u);
        } else {
          dist[u] = -1;
        }
      }
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
          int w = match_r[v];
          if (w == -1) {
            found = true;
          } else if (dist[w] == -1) {
            dist[w] = dist[u] + 1;
            q.push(w);
          }
        }
      }
      return found;
    };
    std::vector<std::size_t> it(k);
    auto dfs = [&](auto&& self, int u) -> bool {
      for (; it[u] < adj[u].size(); ++it[u]) {
        int v = adj[u][it[u]];
        int w = match_r[v];
        if (w == -1 || (dist[w] == dist[u] + 1 && self(self, w))) {
          match_l[u] = v;
          match_r[v] = u;
          return true;
        }
      }
      dist[u] = -1;
      return false;
    };
    while (bfs()) {
      std::fill(it.begin(), it.end(), 0);
      for (int u = 0; u < k; ++u) {
        if (match_l[u] == -1) dfs(dfs, u);
      }
    }
    // Alternating reachability from unmatched left vertices.
    std::vector<char> z_left(k, 0);
    std::vector<char> z_right(k, 0);
    std::queue<int> q;
    for (int u = 0; u < k; ++u) {
      if (match_l[u] == -1) {
        z_left[u] = 1;
        q.push(u);
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (z_right[v] || match_l[u] == v) continue;
        z_right[v] = 1;
        int w = match_r[v];
        if (w != -1 && !z_left[w]) {
          z_left[w] = 1;
          q.push(w);
        }
      }
    }
    std::vector<int> out;
    for (int x = 0; x < k; ++x) {
      if (z_left[x] && !z_right[x]) out.push_back(ids[x]);
    }
    return out;
  }

  // C(n, s) for s = 0..capacity as doubles (saturating).
  const std::vector<double>& BinomRow(int n) {
    if (n < static_cast<int>(binom_cache_.size()) &&
        !binom_cache_[n].empty()) {
      return binom_cache_[n];
    }
    std::vector<double> row(static_cast<std::size_t>(capacity_) + 1, 0.0);
    double c = 1.0;
    for (int s = 0; s <= capacity_ && s <= n; ++s) {
      row[s] = c;
      c = c * static_cast<double>(n - s) / static_cast<double>(s + 1);
      if (!std::isfinite(c)) c = std::numeric_limits<double>::max();
    }
    if (n >= static_cast<int>(binom_cache_.size())) {
      binom_cache_.resize(static_cast<std::size_t>(n) + 1);
    }
    binom_cache_[n] = std::move(row);
    return binom_cache_[n];
  }

  // Bound on the best value reachable below this node. May return any value
  // below `threshold` as soon as one is proven.
  long long UpperBound(const std::vector<Word>& chosen, int chosen_count,
                       const std::vector<int>& inside,
                       const std::vector<int>& cand, long long threshold) {
    long long ub = static_cast<long long>(inside.size() + cand.size());
    if (ub < threshold) return ub;

    std::vector<Word> fresh(words_, 0);
    for (int m : cand) {
      const Word* b = Bits(m);
      for (int w = 0; w < words_; ++w) fresh[w] |= b[w] & ~chosen[w];
    }
    int fresh_count = 0;
    for (Word w : fresh) fresh_count += std::popcount(w);
    const int room = std::min(capacity_ - chosen_count, fresh_count);
    const int final_size = chosen_count + room;

    // Members of one size inside a final union of final_size items are
    // distinct subsets of it (Sperner/LYM style counting).
    if (distinct_) {
      std::vector<long long> by_size(static_cast<std::size_t>(capacity_) + 1, 0);
      for (int m : inside) ++by_size[size_[m]];
      for (int m : cand) ++by_size[size_[m]];
      const std::vector<double>& binom = BinomRow(final_size);
      double count_bound = 0.0;
      for (int s = 0; s <= capacity_; ++s) {
        count_bound += std::min(static_cast<double>(by_size[s]), binom[s]);
      }
      ub = std::min(ub, static_cast<long long>(count_bound + 1e-6));
      if (antichain_) {
        std::vector<int> order;
        for (int s = 0; s <= std::min(capacity_, final_size); ++s) {
          if (by_size[s] > 0) order.push_back(s);
        }
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return binom[a] > binom[b]; });
        double budget = 1.0;
        double lym = 0.0;
        for (int s : order) {
          const double take =
              std::min(static_cast<double>(by_size[s]), budget * binom[s]);
          lym += take;
          budget -= take / binom[s];
          if (budget <= 0.0) break;
        }
        ub = std::min(ub, static_cast<long long>(lym + 1e-6));
      }
      if (ub < threshold) return ub;
    }

    // Group candidates by their not-yet-chosen part X. A final choice of
    // `room` more items covers at most C(room, |X|) distinct parts of each
    // size.
    std::unordered_map<std::vector<Word>, long long, WordsHash> groups;
    std::vector<Word> part(words_);
    for (int m : cand) {
      const Word* b = Bits(m);
      for (int w = 0; w < words_; ++w) part[w] = b[w] & ~chosen[w];
      ++groups[part];
    }
    std::vector<std::vector<long long>> by_new_size(
        static_cast<std::size_t>(room) + 1);
    for (auto& [x, count] : groups) {
      int t = 0;
      for (Word w : x) t += std::popcount(w);
      if (t <= room) by_new_size[t].push_back(count);
    }
    const std::vector<double>& binom = BinomRow(room);
    long long grouped = static_cast<long long>(inside.size());
    for (int t = 1; t <= room; ++t) {
      auto& counts = by_new_size[t];
      std::sort(counts.rbegin(), counts.rend());
      const double limit = binom[t];
      for (std::size_t i = 0; i < counts.size() && static_cast<double>(i) < limit;
           ++i) {
        grouped += counts[i];
      }
    }
    return std::min(ub, grouped);
  }

  void Offer(long long value, std::vector<int> selection) {
    if (value > best_) {
      best_ = value;
      best_selection_ = std::move(selection);
      if (best_ >= stop_at_) stopped_ = true;
    }
  }

  void Dfs(std::vector<Word>& chosen, int chosen_count,
           const std::vector<int>& inside, const std::vector<int>& cand) {
    if (stopped_) return;
    ++nodes_;
    if (node_limit_ != 0 && nodes_ > node_limit_) {
      throw ResourceCapError("SUKP search exceeded " +
                             std::to_string(node_limit_) + " nodes");
    }
    const bool leaf = cand.empty() || chosen_count == capacity_;
    if (!antichain_) {
      Offer(static_cast<long long>(inside.size()), inside);
    } else if (leaf) {
      std::vector<int> ac = MaxAntichain(inside);
      const auto value = static_cast<long long>(ac.size());
      Offer(value, std::move(ac));
    }
    if (stopped_ || leaf) return;

    const long long threshold = std::max(best_ + 1, prune_below_);
    if (UpperBound(chosen, chosen_count, inside, cand, threshold) < threshold) {
      return;
    }

    // Branch on the fresh item shared by the most candidates.
    std::vector<int> freq(static_cast<std::size_t>(words_) * 64, 0);
    for (int m : cand) {
      const Word* b = Bits(m);
      for (int w = 0; w < words_; ++w) {
        Word x = b[w] & ~chosen[w];
        while (x) {
          ++freq[w * 64 + std::countr_zero(x)];
          x &= x - 1;
        }
      }
    }
    const int item = static_cast<int>(
        std::max_element(freq.begin(), freq.end()) - freq.begin());
    const Word mask = Word{1} << (item % 64);
    const int word = item / 64;

    {
      chosen[word] |= mask;
      const int room = capacity_ - (chosen_count + 1);
      std::vector<int> next_inside = inside;
      std::vector<int> next_cand;
      for (int m : cand) {
        const int fresh = NewCount(m, chosen);
        if (fresh == 0) {
          next_inside.push_back(m);
        } else if (fresh <= room) {
          next_cand.push_back(m);
        }
      }
      Dfs(chosen, chosen_count + 1, next_inside, next_cand);
      chosen[word] &= ~mask;
    }
    if (stopped_) return;
    {
      std::vector<int> next_cand;
      for (int m : cand) {
        if (!(Bits(m)[word] & mask)) next_cand.push_back(m);
      }
      Dfs(chosen, chosen_count, inside, next_cand);
    }
  }

  bool antichain_;
  std::uint64_t node_limit_;
  int num_elements_ = 0;
  int capacity_ = 0;
  int words_ = 1;
  int union_size_ = 0;
  bool distinct_ = true;
  std::vector<Word> bits_;
  std::vector<int> size_;
  std::vector<std::size_t> original_;
  std::vector<std::vector<double>> binom_cache_;

  long long best_ = -1;
  std::vector<int> best_selection_;
  long long stop_at_ = kNoLimit;
  long long prune_below_ = 0;
  bool stopped_ = false;
  std::uint64_t nodes_ = 0;
};

SukpSolution MakeSolution(const SukpInstance& inst,
                          std::vector<std::size_t> selected) {
  SukpSolution sol;
  sol.selected = std::move(selected);
  std::vector<ItemId> covered;
  for (std::size_t i : sol.selected) {
    sol.profit += inst.profits[i];
    covered.insert(covered.end(), inst.subsets[i].begin(),
                   inst.subsets[i].end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  for (ItemId x : covered) {
    auto it = std::lower_bound(inst.elements.begin(), inst.elements.end(), x);
    sol.union_weight += inst.weights[it - inst.elements.begin()];
  }
  return sol;
}

SukpSolution Solve(const SukpInstance& inst, bool antichain,
                   const SukpOptions& opts) {
  UnitSukpSolver solver(inst, antichain, opts);
  auto outcome = solver.Run(kNoLimit, 0);
  return MakeSolution(inst, solver.ToOriginal(outcome.selection));
}

}  // namespace

SukpSolution SolveSukp(const SukpInstance& inst, const SukpOptions& opts) {
  return Solve(inst, false, opts);
}

SukpSolution SolveSukpAntichain(const SukpInstance& inst,
                                const SukpOptions& opts) {
  return Solve(inst, true, opts);
}

bool SukpProfitAtLeast(const SukpInstance& inst, bool antichain,
                       long long target, const SukpOptions& opts,
                       long long* witness) {
  UnitSukpSolver solver(inst, antichain, opts);
  if (target <= 0) {
    if (witness) *witness = 0;
    return true;
  }
  if (solver.RootUpperBound() < target) return false;
  auto outcome = solver.Run(target, target);
  if (outcome.best < target) return false;
  if (witness) *witness = outcome.best;
  return true;
}

Log2Result SolveLog2(const SukpInstance& inst, bool antichain,
                     const SukpOptions& opts) {
  UnitSukpSolver solver(inst, antichain, opts);
  const long long root_ub = solver.RootUpperBound();
  long long lo = 0;
  Log2Result r;
  while (true) {
    const int k = Log2Bound(lo);
    if (k >= 62) break;  // beyond any representable collection size
    const long long target = 1LL << k;
    if (root_ub < target) break;
    auto outcome = solver.Run(target, target);
    if (outcome.best < target) break;
    lo = outcome.best;
  }
  r.b = Log2Bound(lo);
  r.q_lower = lo;
  r.q_exact = lo == root_ub;
  return r;
}

int VcBoundFromSukp(const std::vector<Itemset>& coll, bool antichain,
                    const SukpOptions& opts) {
  SukpInstance inst = BuildSukpInstance(coll, 0);
  inst.capacity = static_cast<double>(inst.elements.size());
  return SolveLog2(inst, antichain, opts).b;
}

EvcBound EvcBoundFromSukp(const std::vector<Itemset>& coll,
                          const LengthProfile& profile, bool antichain,
                          const EvcBoundOptions& opts) {
  if (coll.empty()) {
    throw ParameterError("cannot bound an empty collection");
  }
  EvcBound result;
  EvcBoundTrace& trace = result.trace;
  trace.d_index = DIndexFromProfile(profile);
  int previous_bound = 0;  // L*_{i-1}, with L*_0 = 0
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const LengthProfileEntry& entry = profile[i];
    SukpInstance inst = BuildSukpInstance(coll, entry.length);
    EvcBoundRow row;
    row.length = entry.length;
    row.antichain_bound = entry.antichain_bound;
    if (opts.full_trace) {
      SukpSolution sol = antichain ? SolveSukpAntichain(inst, opts.sukp)
                                   : SolveSukp(inst, opts.sukp);
      row.q = static_cast<long long>(sol.profit);
      row.q_exact = true;
      row.b = Log2Bound(row.q);
      row.b_exact = true;
    } else {
      // b_i <= L_i*  <=>  q_i < 2^{L_i*}.
      long long witness = 0;
      const bool exceeds =
          entry.antichain_bound < 62 &&
          SukpProfitAtLeast(inst, antichain, 1LL << entry.antichain_bound,
                            opts.sukp, &witness);
      if (exceeds) {
        row.q = witness;
        row.b = Log2Bound(witness);
      } else {
        Log2Result lr = SolveLog2(inst, antichain, opts.sukp);
        row.q = lr.q_lower;
        row.q_exact = lr.q_exact;
        row.b = lr.b;
        row.b_exact = true;
      }
    }
    trace.rows.push_back(row);
    if (!trace.chosen && row.b_exact && row.b <= row.antichain_bound) {
      trace.chosen = i;
      trace.scan_bound = std::max(row.b, previous_bound);
      if (!opts.full_trace) break;
    }
    if (!trace.chosen) previous_bound = entry.antichain_bound;
  }
  if (!trace.chosen) trace.scan_bound = previous_bound;
  trace.capped_by_d_index = trace.d_index < trace.scan_bound;
  trace.bound = std::min(trace.scan_bound, trace.d_index);
  result.bound = trace.bound;
  return result;
}

}  // namespace tfi
