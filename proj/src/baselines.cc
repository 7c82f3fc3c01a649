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

#include "tfi/baselines.h"

#include <algorithm>
#include <cmath>

#include "tfi/errors.h"

namespace tfi {
namespace {

// Terms this far (in natural log) below the largest are dropped; the
// remaining tail is geometric and contributes below double precision.
constexpr double kNegligibleLog = 40.0;

void CheckTestParameters(double theta, double delta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw ParameterError("theta must lie in (0, 1]");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
}

// Rejection when the null is at the boundary theta = 1 can never happen:
// every count is attained with probability 1 under Bin(n, 1).
bool Rejects(std::int64_t k, std::int64_t n, double theta, double log_alpha) {
  if (theta >= 1.0) return false;
  return BinomialTailLog(k, n, theta).log_p_value <= log_alpha;
}

}  // namespace

BinomialTestResult BinomialTailLog(std::int64_t k, std::int64_t n,
                                   double theta0) {
  if (n < 1) throw ParameterError("binomial test needs n >= 1");
  if (k < 0 || k > n) throw ParameterError("binomial test needs 0 <= k <= n");
  if (!(theta0 > 0.0 && theta0 < 1.0)) {
    throw ParameterError("binomial null parameter must lie in (0, 1)");
  }
  BinomialTestResult r;
  r.k = k;
  r.n = n;
  r.theta0 = theta0;
  const double log_p = std::log(theta0);
  const double log_q = std::log1p(-theta0);
  if (k == 0) {
    r.log_p_value = 0.0;
  } else if (k == n) {
    r.log_p_value = static_cast<double>(n) * log_p;
  } else {
    const double nn = static_cast<double>(n);
    const double lg_n = std::lgamma(nn + 1.0);
    auto log_pmf = [&](std::int64_t j) {
      const double jj = static_cast<double>(j);
      return lg_n - std::lgamma(jj + 1.0) - std::lgamma(nn - jj + 1.0) +
             jj * log_p + (nn - jj) * log_q;
    };
    const auto mode = std::clamp<std::int64_t>(
        static_cast<std::int64_t>(std::floor((nn + 1.0) * theta0)), 0, n);
    const std::int64_t start = std::max(k, mode);
    const double peak = log_pmf(start);
    double sum = 0.0;
    for (std::int64_t j = start; j <= n; ++j) {
      const double t = log_pmf(j) - peak;
      sum += std::exp(t);
      if (t < -kNegligibleLog) break;
    }
    for (std::int64_t j = start - 1; j >= k; --j) {
      const double t = log_pmf(j) - peak;
      sum += std::exp(t);
      if (t < -kNegligibleLog) break;
    }
    r.log_p_value = std::min(0.0, peak + std::log(sum));
  }
  r.p_value = std::exp(r.log_p_value);
  return r;
}

double LogHypothesesPowerset(std::int64_t num_items) {
  if (num_items < 1) throw ParameterError("item universe must be nonempty");
  const double m = static_cast<double>(num_items);
  return m * std::log(2.0) + std::log1p(-std::ldexp(1.0, -static_cast<int>(
                                            std::min<std::int64_t>(num_items,
                                                                   2000))));
}

ItemsetCollection BonferroniMethod(const TransactionDataset& ds, double theta,
                                   double delta) {
  CheckTestParameters(theta, delta);
  if (ds.empty()) throw ParameterError("Bonferroni method needs data");
  if (ds.universe().empty()) {
    throw ParameterError("Bonferroni method needs a nonempty item universe");
  }
  const double log_alpha =
      std::log(delta) -
      LogHypothesesPowerset(static_cast<std::int64_t>(ds.universe().size()));
  const auto n = static_cast<std::int64_t>(ds.size());
  return MineFrequent(ds, theta).Filter([&](const Itemset&, double f) {
    const auto k = static_cast<std::int64_t>(
        std::llround(f * static_cast<double>(n)));
    return Rejects(k, n, theta, log_alpha);
  });
}

ItemsetCollection HoldoutMethod(const TransactionDataset& ds_e,
                                const TransactionDataset& ds_v, double theta,
                                double delta) {
  CheckTestParameters(theta, delta);
  if (ds_e.empty() || ds_v.empty()) {
    throw ParameterError("holdout method needs two nonempty parts");
  }
  ItemsetCollection out(ds_v.size());
  const std::vector<Itemset> candidates = MineFrequent(ds_e, theta).Itemsets();
  if (candidates.empty()) return out;
  const double log_alpha =
      std::log(delta) - std::log(static_cast<double>(candidates.size()));
  const std::vector<std::uint64_t> counts = SupportCounts(ds_v, candidates);
  const auto n = static_cast<std::int64_t>(ds_v.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto k = static_cast<std::int64_t>(counts[i]);
    if (Rejects(k, n, theta, log_alpha)) {
      out.Insert(candidates[i],
                 static_cast<double>(k) / static_cast<double>(n));
    }
  }
  return out;
}

}  // namespace tfi
