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

// Extraction of True Frequent Itemsets with family-wise error rate at most
// delta. Method 1 splits the data into an exploratory and a validation
// part; Method 2 uses the whole dataset twice, first to locate the itemsets
// that could be mistaken for TFIs and then to bound the dimension of their
// range set.

#ifndef TFI_TFI_H_
#define TFI_TFI_H_

#include <cstddef>
#include <optional>
#include <string>

#include "tfi/dataset.h"
#include "tfi/fim.h"
#include "tfi/sukp.h"
#include "tfi/vcbounds.h"

namespace tfi {

struct DeltaSplit {
  double delta = 0.0;
  double delta_1 = 0.0;
  double delta_2 = 0.0;
};

// delta_1 = delta_2 = 1 - sqrt(1 - delta).
DeltaSplit SplitDelta(double delta);
// delta_2 = 1 - (1 - delta) / (1 - delta_1); needs 0 < delta_1 < delta.
DeltaSplit SplitDelta(double delta, double delta_1);

struct TfiConfig {
  double c = kDefaultVcConstant;
  // Budget for the first stage; unset means the symmetric split.
  std::optional<double> delta_1;
  // Largest collection handed to the SUKP bounds (G for Method 1, F for
  // Method 2); 0 disables the cap. Exceeding it throws ResourceCapError.
  std::size_t max_candidates = 0;
  SukpOptions sukp;
};

// Dimension bounds for the range set of one itemset collection.
struct CollectionBounds {
  std::size_t collection_size = 0;
  int collection_items = 0;  // distinct items in the collection
  int powerset_vc = 0;       // |I| - 1
  int sukp_vc = 0;
  int vc = 0;                // min(sukp_vc, powerset_vc)
  EvcBoundTrace evc_trace;   // already capped by the d-index
  int evc = 0;
};

struct TfiSizes {
  std::size_t c_e = 0;  // Method 1
  std::size_t g = 0;
  std::size_t w = 0;    // Method 2
  std::size_t f = 0;    // Method 2
  std::size_t c_v = 0;  // Method 1
  std::size_t output = 0;
};

struct TfiReport {
  std::string method;  // "method1" or "method2"
  double theta = 0.0;
  double delta = 0.0;
  DeltaSplit delta_split;
  // Method 1: eps_e; Method 2: eps_1. Both from the power-set VC bound
  // and the d-index.
  EpsilonResult eps_first;
  int first_d_index = 0;
  // Method 1: eps_v (absent when G is empty); Method 2: eps_2.
  std::optional<EpsilonResult> eps_second;
  std::optional<CollectionBounds> bounds;
  TfiSizes sizes;
  // theta + eps exceeded 1 for the final acceptance threshold.
  bool vacuous = false;
  ItemsetCollection output;
};

// Split-dataset procedure: itemsets frequent enough on ds_e are accepted
// outright, the band just above theta is re-tested on ds_v.
TfiReport Method1(const TransactionDataset& ds_e,
                  const TransactionDataset& ds_v, double theta, double delta,
                  const TfiConfig& config = {});

// Full-dataset procedure. Throws InfeasibleError when theta - eps_1 <= 0.
TfiReport Method2(const TransactionDataset& ds, double theta, double delta,
                  const TfiConfig& config = {});

}  // namespace tfi

#endif  // TFI_TFI_H_
