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

// JSON views of the library's result types, for reports and audits.

#ifndef TFI_JSON_IO_H_
#define TFI_JSON_IO_H_

#include "json.hpp"
#include "tfi/fim.h"
#include "tfi/itemset.h"
#include "tfi/sukp.h"
#include "tfi/tfi.h"
#include "tfi/vcbounds.h"

namespace tfi {

nlohmann::json ToJson(const Itemset& itemset);
// [{"itemset": [...], "frequency": f}, ...] in itemset order.
nlohmann::json ToJson(const ItemsetCollection& coll);
nlohmann::json ToJson(const EpsilonResult& eps);
nlohmann::json ToJson(const EvcBoundTrace& trace);
nlohmann::json ToJson(const TfiReport& report);

}  // namespace tfi

#endif  // TFI_JSON_IO_H_
