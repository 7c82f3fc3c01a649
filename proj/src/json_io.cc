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

#include "tfi/json_io.h"

#include <vector>

namespace tfi {

using nlohmann::json;

json ToJson(const Itemset& itemset) {
  return json(std::vector<ItemId>(itemset.begin(), itemset.end()));
}

json ToJson(const ItemsetCollection& coll) {
  json out = json::array();
  for (const auto& [a, f] : coll) {
    out.push_back({{"itemset", ToJson(a)}, {"frequency", f}});
  }
  return out;
}

json ToJson(const EpsilonResult& eps) {
  json out = {{"eps", eps.eps},
              {"provenance", eps.provenance},
              {"ell", eps.ell},
              {"delta", eps.delta},
              {"c", eps.c}};
  out["eps_vc"] = eps.eps_vc ? json(*eps.eps_vc) : json(nullptr);
  out["eps_evc"] = eps.eps_evc ? json(*eps.eps_evc) : json(nullptr);
  out["d_vc"] = eps.d_vc ? json(*eps.d_vc) : json(nullptr);
  out["d_evc"] = eps.d_evc ? json(*eps.d_evc) : json(nullptr);
  return out;
}

json ToJson(const EvcBoundTrace& trace) {
  json rows = json::array();
  for (const EvcBoundRow& row : trace.rows) {
    rows.push_back({{"length", row.length},
                    {"antichain_bound", row.antichain_bound},
                    {"q", row.q},
                    {"q_exact", row.q_exact},
                    {"b", row.b},
                    {"b_exact", row.b_exact}});
  }
  return {{"rows", rows},
          {"chosen", trace.chosen ? json(*trace.chosen) : json(nullptr)},
          {"scan_bound", trace.scan_bound},
          {"d_index", trace.d_index},
          {"capped_by_d_index", trace.capped_by_d_index},
          {"bound", trace.bound}};
}

json ToJson(const TfiReport& report) {
  const bool split = report.method == "method1";
  json eps = json::object();
  json first = ToJson(report.eps_first);
  first["d_index"] = report.first_d_index;
  eps[split ? "eps_e" : "eps_1"] = first;
  eps[split ? "eps_v" : "eps_2"] =
      report.eps_second ? ToJson(*report.eps_second) : json(nullptr);

  json bounds = nullptr;
  if (report.bounds) {
    const CollectionBounds& b = *report.bounds;
    bounds = {{"collection", split ? "G" : "F"},
              {"collection_size", b.collection_size},
              {"collection_items", b.collection_items},
              {"vc", {{"powerset", b.powerset_vc},
                      {"sukp", b.sukp_vc},
                      {"bound", b.vc}}},
              {"evc", {{"bound", b.evc}, {"d_index", b.evc_trace.d_index}}},
              {"sukp_trace", ToJson(b.evc_trace)}};
  }

  json sizes = {{"G", report.sizes.g}, {"output", report.sizes.output}};
  if (split) {
    sizes["C_e"] = report.sizes.c_e;
    sizes["C_v"] = report.sizes.c_v;
  } else {
    sizes["W"] = report.sizes.w;
    sizes["F"] = report.sizes.f;
  }

  return {{"method", report.method},
          {"theta", report.theta},
          {"delta", report.delta},
          {"delta_split", {{"delta_1", report.delta_split.delta_1},
                           {"delta_2", report.delta_split.delta_2}}},
          {"epsilons", eps},
          {"bounds", bounds},
          {"sizes", sizes},
          {"vacuous", report.vacuous},
          {"output", ToJson(report.output)}};
}

}  // namespace tfi
