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

// Sample-size to accuracy conversions for range sets of bounded (empirical)
// VC-dimension. Values are not clamped to 1; a caller comparing
// theta + eps > 1 gets an empty rejection region.

#ifndef TFI_VCBOUNDS_H_
#define TFI_VCBOUNDS_H_

#include <optional>
#include <span>
#include <string>

namespace tfi {

inline constexpr double kDefaultVcConstant = 0.5;

// sqrt((c / ell) * (d + ln(1/delta))). Bound from the VC-dimension d.
double EpsilonVc(int d, long long ell, double delta,
                 double c = kDefaultVcConstant);

// 2 sqrt(2 d ln(ell + 1) / ell) + sqrt(2 ln(2/delta) / ell). Bound from an
// upper bound d on the empirical VC-dimension of the ell-point sample.
double EpsilonEvc(int d, long long ell, double delta);

// Smallest candidate; throws ParameterError on an empty list or a
// non-positive candidate.
double EpsilonMin(std::span<const double> candidates);

// VC(R(2^I)) <= |I| - 1.
int VcBoundPowerset(long long num_items);

// Both bounds evaluated at one (ell, delta), with the minimum and the name
// of the formula that produced it ("vc", "evc" or "both" on a tie).
struct EpsilonResult {
  std::optional<double> eps_vc;
  std::optional<double> eps_evc;
  double eps = 0.0;
  std::optional<int> d_vc;
  std::optional<int> d_evc;
  long long ell = 0;
  double delta = 0.0;
  double c = kDefaultVcConstant;
  std::string provenance;
};

// At least one of d_vc / d_evc must be present.
EpsilonResult ComputeEpsilon(std::optional<int> d_vc, std::optional<int> d_evc,
                             long long ell, double delta,
                             double c = kDefaultVcConstant);

}  // namespace tfi

#endif  // TFI_VCBOUNDS_H_
