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

// Binomial-test baselines with FWER control by a direct correction.

#ifndef TFI_BASELINES_H_
#define TFI_BASELINES_H_

#include <cstdint>

#include "tfi/dataset.h"
#include "tfi/fim.h"

namespace tfi {

struct BinomialTestResult {
  double log_p_value = 0.0;  // natural log; always <= 0
  double p_value = 1.0;      // exp(log_p_value), may underflow to 0
  std::int64_t k = 0;
  std::int64_t n = 0;
  double theta0 = 0.0;
};

// P[Bin(n, theta0) >= k], summed in log space outward from the larger of k
// and the mode until the terms stop contributing.
BinomialTestResult BinomialTailLog(std::int64_t k, std::int64_t n,
                                   double theta0);

// ln(2^num_items - 1) without forming the power.
double LogHypothesesPowerset(std::int64_t num_items);

// Tests each A in FI(D, theta) at level delta / (2^|I| - 1).
ItemsetCollection BonferroniMethod(const TransactionDataset& ds, double theta,
                                   double delta);

// Mines FI(D_e, theta) (k itemsets), then tests each on D_v at level
// delta / k. Output frequencies are the evaluation-part frequencies.
ItemsetCollection HoldoutMethod(const TransactionDataset& ds_e,
                                const TransactionDataset& ds_v, double theta,
                                double delta);

}  // namespace tfi

#endif  // TFI_BASELINES_H_
