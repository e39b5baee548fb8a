// Copyright 2026 The qmm Authors
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

#include <algorithm>
#include <cmath>

#include "qmm/demos.hpp"
#include "qmm/errors.hpp"

namespace qmm {
namespace {

TEST(QuaternionDemo, ProducesPauliMeasurements) {
  const auto r = quaternion_demo();
  ASSERT_EQ(r.outputs.size(), 3u);
  EXPECT_EQ(r.outputs[0].subgroup, "i");
  EXPECT_EQ(r.outputs[1].subgroup, "j");
  EXPECT_EQ(r.outputs[2].subgroup, "k");
  EXPECT_LE(r.max_pvm_error, 1e-9);
  for (const auto& o : r.outputs) {
    EXPECT_EQ(o.pvm.size(), 2u);
    EXPECT_LE(o.pvm_defect, 1e-9);
    EXPECT_LE(o.sharp_mismatch, 1e-9);
  }
  EXPECT_LE(r.max_fidelity_error, 1e-10);
  for (int a = 0; a < 3; ++a) EXPECT_NEAR(r.fidelities(a, a), 1.0, 1e-12);
  EXPECT_NEAR(r.bound_at_zero, 1.0 / std::sqrt(2.0), 1e-6);
  EXPECT_NEAR(r.coset_kernel_fidelity, 0.0, 1e-12);
  EXPECT_LT(r.elapsed_seconds, 1.0);
}

class PhaseSpaceDemo : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PhaseSpaceDemo, MutuallyUnbiasedRankOneMeasurements) {
  const std::size_t d = GetParam();
  const auto r = phase_space_demo(d);
  EXPECT_EQ(r.d, d);
  ASSERT_EQ(r.outputs.size(), d + 1);
  EXPECT_LE(r.max_overlap_error, 1e-8);
  EXPECT_LE(r.max_pvm_defect, 1e-8);
  EXPECT_LE(r.max_rank_defect, 1e-8);
  EXPECT_TRUE(r.formula_failures.empty());
  for (const auto& o : r.outputs) EXPECT_EQ(o.pvm.size(), d);
  for (std::size_t j = 0; j <= d; ++j)
    for (std::size_t k = 0; k <= d; ++k)
      EXPECT_NEAR(r.overlaps(j, k), j == k ? 1.0 : 1.0 / std::sqrt(double(d)), 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Primes, PhaseSpaceDemo, ::testing::Values(3u, 5u, 7u));

TEST(PhaseSpaceDemoQubit, FlagsFormulaFailure) {
  const auto r = phase_space_demo(2);
  EXPECT_LE(r.max_overlap_error, 1e-8);
  ASSERT_EQ(r.formula_failures.size(), 1u);
  EXPECT_EQ(r.formula_failures.front(), "(1,1)");
}

TEST(PhaseSpaceDemoQubit, RejectsUnsupportedDimensions) {
  EXPECT_THROW(phase_space_demo(4), DomainError);
  EXPECT_THROW(phase_space_demo(1), DomainError);
  EXPECT_THROW(phase_space_demo(17), DomainError);
}

}  // namespace
}  // namespace qmm
