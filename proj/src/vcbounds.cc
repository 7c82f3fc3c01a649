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

#include "tfi/vcbounds.h"

#include <algorithm>
#include <cmath>

#include "tfi/errors.h"

namespace tfi {
namespace {

void CheckCommon(int d, long long ell, double delta) {
  if (d < 0) throw ParameterError("dimension bound must be non-negative");
  if (ell < 1) throw ParameterError("sample size must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
}

}  // namespace

double EpsilonVc(int d, long long ell, double delta, double c) {
  CheckCommon(d, ell, delta);
  if (!(c > 0.0)) throw ParameterError("constant c must be positive");
  const double l = static_cast<double>(ell);
  return std::sqrt((c / l) * (static_cast<double>(d) - std::log(delta)));
}

double EpsilonEvc(int d, long long ell, double delta) {
  CheckCommon(d, ell, delta);
  const double l = static_cast<double>(ell);
  const double shatter =
      2.0 * std::sqrt(2.0 * static_cast<double>(d) * std::log1p(l) / l);
  const double confidence = std::sqrt(2.0 * std::log(2.0 / delta) / l);
  return shatter + confidence;
}

double EpsilonMin(std::span<const double> candidates) {
  if (candidates.empty()) {
    throw ParameterError("no epsilon candidates to combine");
  }
  for (double e : candidates) {
    if (!(e > 0.0)) throw ParameterError("epsilon candidates must be > 0");
  }
  return *std::min_element(candidates.begin(), candidates.end());
}

int VcBoundPowerset(long long num_items) {
  if (num_items < 1) throw ParameterError("item universe must be nonempty");
  return static_cast<int>(num_items - 1);
}

EpsilonResult ComputeEpsilon(std::optional<int> d_vc, std::optional<int> d_evc,
                             long long ell, double delta, double c) {
  if (!d_vc && !d_evc) {
    throw ParameterError("need at least one dimension bound");
  }
  EpsilonResult r;
  r.d_vc = d_vc;
  r.d_evc = d_evc;
  r.ell = ell;
  r.delta = delta;
  r.c = c;
  if (d_vc) r.eps_vc = EpsilonVc(*d_vc, ell, delta, c);
  if (d_evc) r.eps_evc = EpsilonEvc(*d_evc, ell, delta);
  if (r.eps_vc && r.eps_evc) {
    const double both[] = {*r.eps_vc, *r.eps_evc};
    r.eps = EpsilonMin(both);
    r.provenance = *r.eps_vc == *r.eps_evc ? "both"
                   : r.eps == *r.eps_vc    ? "vc"
                                           : "evc";
  } else if (r.eps_vc) {
    r.eps = *r.eps_vc;
    r.provenance = "vc";
  } else {
    r.eps = *r.eps_evc;
    r.provenance = "evc";
  }
  return r;
}

}  // namespace tfi
