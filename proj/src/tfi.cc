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

#include "tfi/tfi.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "tfi/errors.h"

namespace tfi {
namespace {

void CheckParameters(double theta, double delta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw ParameterError("theta must lie in (0, 1]");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
}

DeltaSplit SplitFor(double delta, const TfiConfig& config) {
  return config.delta_1 ? SplitDelta(delta, *config.delta_1)
                        : SplitDelta(delta);
}

void CheckCap(std::size_t size, const TfiConfig& config, const char* what) {
  if (config.max_candidates > 0 && size > config.max_candidates) {
    throw ResourceCapError(std::string(what) + " holds " +
                           std::to_string(size) + " itemsets, above the cap " +
                           std::to_string(config.max_candidates));
  }
}

int DistinctItems(const std::vector<Itemset>& coll) {
  std::set<ItemId> items;
  for (const Itemset& a : coll) items.insert(a.begin(), a.end());
  return static_cast<int>(items.size());
}

// The VC and EVC bounds solve independent SUKP families; run the VC side on
// a second thread.
CollectionBounds BoundCollection(const std::vector<Itemset>& coll,
                                 const LengthProfile& profile,
                                 long long num_items, bool antichain,
                                 const TfiConfig& config) {
  CollectionBounds b;
  b.collection_size = coll.size();
  b.powerset_vc = VcBoundPowerset(num_items);
  if (coll.empty()) {
    b.evc_trace.d_index = DIndexFromProfile(profile);
    return b;
  }
  b.collection_items = DistinctItems(coll);
  auto vc = std::async(std::launch::async, [&] {
    return VcBoundFromSukp(coll, antichain, config.sukp);
  });
  EvcBoundOptions evc_opts;
  evc_opts.sukp = config.sukp;
  EvcBound evc = EvcBoundFromSukp(coll, profile, antichain, evc_opts);
  b.sukp_vc = vc.get();
  b.vc = std::min(b.sukp_vc, b.powerset_vc);
  b.evc_trace = std::move(evc.trace);
  b.evc = evc.bound;
  return b;
}

}  // namespace

DeltaSplit SplitDelta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
  const double part = -std::expm1(0.5 * std::log1p(-delta));
  return {delta, part, part};
}

DeltaSplit SplitDelta(double delta, double delta_1) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
  if (!(delta_1 > 0.0 && delta_1 < delta)) {
    throw ParameterError("delta_1 must lie in (0, delta)");
  }
  return {delta, delta_1, 1.0 - (1.0 - delta) / (1.0 - delta_1)};
}

TfiReport Method1(const TransactionDataset& ds_e,
                  const TransactionDataset& ds_v, double theta, double delta,
                  const TfiConfig& config) {
  CheckParameters(theta, delta);
  if (ds_e.empty() || ds_v.empty()) {
    throw ParameterError("method 1 needs two nonempty parts");
  }
  std::vector<ItemId> universe;
  std::set_union(ds_e.universe().begin(), ds_e.universe().end(),
                 ds_v.universe().begin(), ds_v.universe().end(),
                 std::back_inserter(universe));
  if (universe.empty()) throw ParameterError("item universe is empty");
  const auto num_items = static_cast<long long>(universe.size());

  TfiReport r;
  r.method = "method1";
  r.theta = theta;
  r.delta = delta;
  r.delta_split = SplitFor(delta, config);

  const auto n_e = static_cast<long long>(ds_e.size());
  const auto n_v = static_cast<long long>(ds_v.size());
  r.first_d_index = DIndex(ds_e);
  r.eps_first = ComputeEpsilon(VcBoundPowerset(num_items), r.first_d_index,
                               n_e, r.delta_split.delta_1, config.c);
  const double accept_e = theta + r.eps_first.eps;

  r.output = ItemsetCollection(ds_e.size() + ds_v.size());
  std::vector<Itemset> band;
  for (const auto& [a, f] : MineFrequent(ds_e, theta)) {
    if (f >= accept_e) {
      r.output.Insert(a, f);
    } else {
      band.push_back(a);
    }
  }
  r.sizes.c_e = r.output.size();
  r.sizes.g = band.size();
  if (!band.empty()) {
    CheckCap(band.size(), config, "G");
    r.bounds = BoundCollection(band, ComputeLengthProfile(ds_v), num_items,
                               /*antichain=*/false, config);
    r.eps_second = ComputeEpsilon(r.bounds->vc, r.bounds->evc, n_v,
                                  r.delta_split.delta_2, config.c);
    const double accept_v = theta + r.eps_second->eps;
    r.vacuous = accept_v > 1.0;
    const std::vector<std::uint64_t> counts = SupportCounts(ds_v, band);
    for (std::size_t i = 0; i < band.size(); ++i) {
      const double f =
          static_cast<double>(counts[i]) / static_cast<double>(n_v);
      if (f >= accept_v) {
        r.output.Insert(band[i], f);
        ++r.sizes.c_v;
      }
    }
  } else {
    r.vacuous = accept_e > 1.0;
  }
  r.sizes.output = r.output.size();
  return r;
}

TfiReport Method2(const TransactionDataset& ds, double theta, double delta,
                  const TfiConfig& config) {
  CheckParameters(theta, delta);
  if (ds.empty()) throw ParameterError("method 2 needs data");
  if (ds.universe().empty()) throw ParameterError("item universe is empty");
  const auto num_items = static_cast<long long>(ds.universe().size());
  const auto n = static_cast<long long>(ds.size());

  TfiReport r;
  r.method = "method2";
  r.theta = theta;
  r.delta = delta;
  r.delta_split = SplitFor(delta, config);

  const LengthProfile profile = ComputeLengthProfile(ds);
  r.first_d_index = DIndexFromProfile(profile);
  r.eps_first = ComputeEpsilon(VcBoundPowerset(num_items), r.first_d_index, n,
                               r.delta_split.delta_1, config.c);
  const double lo = theta - r.eps_first.eps;
  const double hi = theta + r.eps_first.eps;
  if (lo <= 0.0) {
    throw InfeasibleError("theta - eps_1 = " + std::to_string(lo) +
                          " is not positive; the dataset is too small for "
                          "this theta");
  }

  const ItemsetCollection low = MineFrequent(ds, lo);
  const std::vector<Itemset> low_sets = low.Itemsets();
  std::vector<Itemset> candidates = NegativeBorder(low_sets, ds.universe());
  r.sizes.w = candidates.size();
  for (const auto& [a, f] : low) {
    if (f < hi) candidates.push_back(a);
  }
  r.sizes.g = candidates.size() - r.sizes.w;
  r.sizes.f = candidates.size();
  CheckCap(candidates.size(), config, "F");

  r.bounds =
      BoundCollection(candidates, profile, num_items, /*antichain=*/true,
                      config);
  r.eps_second = ComputeEpsilon(r.bounds->vc, r.bounds->evc, n,
                                r.delta_split.delta_2, config.c);
  const double accept = theta + r.eps_second->eps;
  r.vacuous = accept > 1.0;
  r.output = low.Filter([&](const Itemset&, double f) { return f >= accept; });
  r.sizes.output = r.output.size();
  return r;
}

}  // namespace tfi
