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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "tfi/errors.h"

namespace tfi {
namespace {

// Reference values evaluated at 50 digits with mpmath.
constexpr double kEpsVc51000 = 0.060425926112034251899;
constexpr double kEpsEvc51000 = 0.60309475576626202801;

TEST(EpsilonVcTest, ReferenceValue) {
  EXPECT_NEAR(EpsilonVc(5, 1000, 0.1, 0.5), kEpsVc51000, 1e-12 * kEpsVc51000);
}

TEST(EpsilonVcTest, ZeroDimensionAtInverseE) {
  EXPECT_NEAR(EpsilonVc(0, 400, std::exp(-1.0), 0.5), std::sqrt(0.5 / 400),
              1e-15);
}

TEST(EpsilonVcTest, MonotoneInConstant) {
  double prev = 0.0;
  for (double c : {0.01, 0.1, 0.5, 1.0, 2.0}) {
    const double e = EpsilonVc(3, 1000, 0.1, c);
    EXPECT_GT(e, prev);
    prev = e;
  }
}

TEST(EpsilonVcTest, DomainErrors) {
  EXPECT_THROW(EpsilonVc(-1, 10, 0.1), ParameterError);
  EXPECT_THROW(EpsilonVc(1, 0, 0.1), ParameterError);
  EXPECT_THROW(EpsilonVc(1, 10, 0.0), ParameterError);
  EXPECT_THROW(EpsilonVc(1, 10, 1.0), ParameterError);
  EXPECT_THROW(EpsilonVc(1, 10, 0.1, 0.0), ParameterError);
}

TEST(EpsilonEvcTest, ReferenceValue) {
  EXPECT_NEAR(EpsilonEvc(5, 1000, 0.1), kEpsEvc51000, 1e-12 * kEpsEvc51000);
}

TEST(EpsilonEvcTest, ZeroDimensionKeepsSecondTerm) {
  EXPECT_NEAR(EpsilonEvc(0, 1000, 0.1), std::sqrt(2 * std::log(20.0) / 1000),
              1e-15);
}

TEST(EpsilonEvcTest, VanishesWithSampleSize) {
  double prev = 1e9;
  for (long long ell : {100LL, 10000LL, 1000000LL, 100000000LL}) {
    const double e = EpsilonEvc(4, ell, 0.05);
    EXPECT_LT(e, prev);
    prev = e;
  }
  EXPECT_LT(prev, 0.01);
}

TEST(EpsilonMinTest, Examples) {
  const std::vector<double> two = {kEpsVc51000, kEpsEvc51000};
  EXPECT_EQ(EpsilonMin(two), kEpsVc51000);
  const std::vector<double> one = {0.3};
  EXPECT_EQ(EpsilonMin(one), 0.3);
  const std::vector<double> tie = {0.2, 0.2};
  EXPECT_EQ(EpsilonMin(tie), 0.2);
  EXPECT_THROW(EpsilonMin(std::vector<double>{}), ParameterError);
}

TEST(VcBoundPowersetTest, Examples) {
  EXPECT_EQ(VcBoundPowerset(10), 9);
  EXPECT_EQ(VcBoundPowerset(1), 0);
  EXPECT_EQ(VcBoundPowerset(2), 1);
  EXPECT_THROW(VcBoundPowerset(0), ParameterError);
}

TEST(ComputeEpsilonTest, ProvenanceTags) {
  const EpsilonResult both = ComputeEpsilon(5, 5, 1000, 0.1);
  EXPECT_EQ(both.provenance, "vc");
  EXPECT_NEAR(both.eps, kEpsVc51000, 1e-15);
  ASSERT_TRUE(both.eps_evc.has_value());

  const EpsilonResult evc_only = ComputeEpsilon(std::nullopt, 0, 1000, 0.1);
  EXPECT_EQ(evc_only.provenance, "evc");
  EXPECT_FALSE(evc_only.eps_vc.has_value());

  // At tiny d and very large ell the EVC bound can win.
  const EpsilonResult evc_wins = ComputeEpsilon(200, 0, 100000000, 0.1);
  EXPECT_EQ(evc_wins.provenance, "evc");
  EXPECT_THROW(ComputeEpsilon(std::nullopt, std::nullopt, 10, 0.1),
               ParameterError);
}

}  // namespace
}  // namespace tfi
