// Copyright 2026 The phasepovm Authors
//
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

#include <gtest/gtest.h>

#include <cmath>

#include "properties.hpp"

namespace {

constexpr std::size_t kInstances = 200;

TEST(Properties, Completeness) {
  const auto o = properties::completeness(kInstances, 101);
  EXPECT_EQ(o.failures, 0u) << "worst " << o.worst;
  EXPECT_EQ(o.instances, kInstances);
}

TEST(Properties, CovarianceShift) {
  const auto o = properties::covariance(kInstances, 102);
  EXPECT_EQ(o.failures, 0u) << "worst " << o.worst;
}

TEST(Properties, NormConservation) {
  const auto o = properties::norm_conservation(kInstances, 103);
  EXPECT_EQ(o.failures, 0u) << "worst " << o.worst;
}

TEST(Properties, MixedStateLinearity) {
  const auto o = properties::mixed_state_linearity(kInstances, 104);
  EXPECT_EQ(o.failures, 0u) << "worst " << o.worst;
}

TEST(Properties, RecorderCountsViolations) {
  properties::Outcome o;
  o.record(1e-15, 1e-12);
  o.record(1e-3, 1e-12);
  o.record(std::nan(""), 1e-12);
  EXPECT_EQ(o.instances, 3u);
  EXPECT_EQ(o.failures, 2u);
  EXPECT_FALSE(o.passed());
}

}  // namespace
