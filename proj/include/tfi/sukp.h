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

// Set-Union Knapsack: pick subsets maximizing total profit subject to the
// weight of their union not exceeding a capacity. With unit profits and
// weights the optimum at capacity l is the largest number of itemsets of a
// collection that fit inside one transaction of length l, which turns into
// bounds on the (empirical) VC-dimension of the collection's range set.
//
// The solvers here handle the unit case only, by depth-first
// branch-and-bound over the items of the union.

#ifndef TFI_SUKP_H_
#define TFI_SUKP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "tfi/dataset.h"
#include "tfi/itemset.h"

namespace tfi {

struct SukpInstance {
  std::vector<ItemId> elements;   // the union universe U, sorted
  std::vector<Itemset> subsets;   // S; each a subset of `elements`
  std::vector<double> profits;    // one per subset
  std::vector<double> weights;    // one per element
  double capacity = 0.0;
};

// U = items occurring in `coll`, unit profits and weights. Throws
// ParameterError on an empty collection.
SukpInstance BuildSukpInstance(const std::vector<Itemset>& coll,
                               long long capacity);

struct SukpSolution {
  std::vector<std::size_t> selected;  // indices into instance.subsets
  double profit = 0.0;
  double union_weight = 0.0;
};

struct SukpOptions {
  // Branch-and-bound nodes allowed per solve; 0 means unlimited. Exceeding
  // it throws ResourceCapError.
  std::uint64_t node_limit = 0;
};

SukpSolution SolveSukp(const SukpInstance& inst, const SukpOptions& opts = {});

// Optimum over selections that are antichains (no selected subset contains
// another). This relaxes "maximal antichain", so it upper-bounds the
// maximal-antichain optimum.
SukpSolution SolveSukpAntichain(const SukpInstance& inst,
                                const SukpOptions& opts = {});

// floor(log2 q) + 1 for q >= 1, and 0 for q = 0.
int Log2Bound(long long q);

// b = Log2Bound(q) of the optimum q, computed with the power-of-two
// shortcut: the search stops once the incumbent and the proven upper bound
// fall in the same [2^(b-1), 2^b) bracket. q_lower is a feasible profit in
// that bracket.
struct Log2Result {
  int b = 0;
  long long q_lower = 0;
  bool q_exact = false;
};
Log2Result SolveLog2(const SukpInstance& inst, bool antichain,
                     const SukpOptions& opts = {});

// Whether the optimum reaches `target`; on success `*witness` (if given)
// receives a feasible profit >= target.
bool SukpProfitAtLeast(const SukpInstance& inst, bool antichain,
                       long long target, const SukpOptions& opts = {},
                       long long* witness = nullptr);

// Upper bound on VC(R(coll)): Log2Bound of the optimum at capacity equal to
// the number of distinct items of `coll`. Throws on an empty collection.
int VcBoundFromSukp(const std::vector<Itemset>& coll, bool antichain,
                    const SukpOptions& opts = {});

struct EvcBoundRow {
  int length = 0;           // l_i
  int antichain_bound = 0;  // L_i*
  // Optimal profit q_i when q_exact; otherwise a feasible profit that
  // already certifies b_i > L_i*.
  long long q = 0;
  bool q_exact = false;
  // b_i = floor(log2 q_i) + 1 when b_exact; otherwise a lower bound.
  int b = 0;
  bool b_exact = false;
};

struct EvcBoundTrace {
  std::vector<EvcBoundRow> rows;
  // First row (0-based) with b_i <= L_i*, if any.
  std::optional<std::size_t> chosen;
  // max(b_chosen, L*_{chosen-1}), or L_w* when no row qualifies.
  int scan_bound = 0;
  int d_index = 0;
  bool capped_by_d_index = false;
  int bound = 0;
};

struct EvcBoundOptions {
  SukpOptions sukp;
  // Solve every row exactly instead of stopping at the first qualifying
  // row; for audits and tests.
  bool full_trace = false;
};

struct EvcBound {
  int bound = 0;
  EvcBoundTrace trace;
};

// Upper bound on EVC(R(coll), D) from the length profile of D. Scans the
// distinct lengths from longest to shortest, finds the first row j with
// b_j <= L_j* and returns max(b_j, L*_{j-1}) capped by the d-index of D.
// `antichain` restricts the SUKPs to antichain selections, bounding every
// antichain sub-collection of `coll`.
EvcBound EvcBoundFromSukp(const std::vector<Itemset>& coll,
                          const LengthProfile& profile, bool antichain,
                          const EvcBoundOptions& opts = {});

}  // namespace tfi

#endif  // TFI_SUKP_H_
