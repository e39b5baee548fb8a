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
#include <numeric>

#include "oracles.hpp"
#include "qmm/covariant.hpp"
#include "qmm/divergence.hpp"
#include "qmm/errors.hpp"
#include "qmm/postprocessing.hpp"
#include "qmm/random.hpp"

namespace qmm {
namespace {

TEST(PostProcessing, ValidatesRows) {
  Eigen::MatrixXd k(2, 2);
  k << 0.5, 0.5, 0.7, 0.2;
  EXPECT_THROW(PostProcessing{k}, NormalizationError);
  k << 1.5, -0.5, 0.5, 0.5;
  EXPECT_THROW(PostProcessing{k}, DomainError);
  EXPECT_THROW(PostProcessing(Eigen::MatrixXd::Identity(2, 2), {"only"}), DimensionError);
}

TEST(PostProcessing, FactoriesAndDeterminism) {
  EXPECT_TRUE(PostProcessing::identity(3).is_deterministic());
  EXPECT_TRUE(PostProcessing::all_merge(4).is_deterministic());
  EXPECT_EQ(PostProcessing::all_merge(4).n_out(), 1u);
  EXPECT_FALSE(PostProcessing::uniform(3, 2).is_deterministic());
  const auto l = PostProcessing::from_assignment({1, 0, 1}, 2, {"odd", "even"});
  EXPECT_EQ(l(0, 1), 1.0);
  EXPECT_EQ(l(1, 0), 1.0);
  EXPECT_EQ(l.output_labels()[0], "odd");
  Rng rng(1);
  EXPECT_FALSE(random_kernel(3, 3, rng).is_deterministic());
}

TEST(PostProcessObservable, IdentityAndAllMerge) {
  Rng rng(2);
  const Observable e = random_povm(3, 4, rng);
  EXPECT_LT(max_effect_diff(post_process_observable(PostProcessing::identity(4), e), e), 1e-15);
  const Observable merged = post_process_observable(PostProcessing::all_merge(4), e);
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_LT(max_abs_diff(merged.effect(0), identity(3)), 1e-9);
}

TEST(PostProcessObservable, CosetKernelSharpensQuaternionObservable) {
  const auto rep = q8_representation();
  const auto& g = rep.group();
  const auto h = cyclic_subgroup(g, g.at("i"));
  const auto psi = eigenvector_program_states(rep, h.generator).vectors.front();
  const Observable f =
      post_process_observable(coset_postprocessing(g, h), covariant_observable(rep, DensityState::pure(psi)));
  ASSERT_EQ(f.size(), 2u);
  double best = 1.0;
  for (char axis : {'x', 'y', 'z'}) {
    const auto t = oracle::pauli_pvm(axis);
    best = std::min({best, std::max(max_abs_diff(f.effect(0), t[0]), max_abs_diff(f.effect(1), t[1])),
                     std::max(max_abs_diff(f.effect(0), t[1]), max_abs_diff(f.effect(1), t[0]))});
  }
  EXPECT_LT(best, 1e-12);
  EXPECT_TRUE(coset_postprocessing(g, h).is_deterministic());
  EXPECT_TRUE(f.is_sharp());
}

TEST(PostProcessObservable, MixingFormulaAndLabels) {
  Rng rng(3);
  const Observable e = random_povm(2, 3, rng);
  const PostProcessing l = random_kernel(3, 2, rng);
  const Observable f = post_process_observable(l, e);
  EXPECT_EQ(f.labels(), l.output_labels());
  for (std::size_t j = 0; j < 2; ++j) {
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    for (std::size_t i = 0; i < 3; ++i) expected += l(i, j) * e.effect(i);
    EXPECT_LT(max_abs_diff(f.effect(j), expected), 1e-14);
  }
  EXPECT_THROW(post_process_observable(PostProcessing::identity(2), e), DimensionError);
}

TEST(PostProcessDistribution, IdentityAndUniform) {
  Rng rng(4);
  const auto p = random_distribution(5, rng);
  const auto same = post_process_distribution(PostProcessing::identity(5), p);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(same[i], p[i]);
  const auto flat = post_process_distribution(PostProcessing::uniform(5, 3), p);
  for (double v : flat) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
  EXPECT_THROW(post_process_distribution(PostProcessing::identity(4), p), DimensionError);
}

TEST(PostProcessDistribution, CommutesWithOutcomeStatistics) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Observable e = random_povm(3, 4, rng);
    const PostProcessing l = random_kernel(4, 1 + trial % 4, rng);
    const auto rho = random_mixed_state(3, 1 + trial % 3, rng);
    const auto a = outcome_distribution(post_process_observable(l, e), rho);
    const auto b = post_process_distribution(l, outcome_distribution(e, rho));
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      EXPECT_NEAR(a[j], b[j], 1e-10);
      sum += b[j];
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(PpFidelity, SelfAndDisjointRows) {
  Rng rng(6);
  const PostProcessing l = random_kernel(4, 3, rng);
  EXPECT_NEAR(pp_fidelity(l, l), 1.0, 1e-12);
  const auto a = PostProcessing::from_assignment({0, 1, 0}, 2);
  const auto b = PostProcessing::from_assignment({0, 0, 0}, 2);
  EXPECT_EQ(pp_fidelity(a, b), 0.0);
  EXPECT_THROW(pp_fidelity(a, PostProcessing::identity(3)), DimensionError);
}

TEST(PpFidelity, EqualsInfimumOverSimplexGrid) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const PostProcessing l1 = random_kernel(3, 2, rng);
    const PostProcessing l2 = random_kernel(3, 2, rng);
    const double closed = pp_fidelity(l1, l2);
    const auto values = oracle::kernel_grid_values(l1, l2, 20);
    const double grid_min = *std::min_element(values.begin(), values.end());
    for (double v : values) EXPECT_LE(closed, v + 1e-12);
    EXPECT_NEAR(closed, grid_min, 1e-3);
  }
}

TEST(PpFidelity, SymmetricAndRowPermutationInvariant) {
  Rng rng(8);
  const PostProcessing l1 = random_kernel(4, 3, rng);
  const PostProcessing l2 = random_kernel(4, 3, rng);
  EXPECT_NEAR(pp_fidelity(l1, l2), pp_fidelity(l2, l1), 1e-15);
  Eigen::PermutationMatrix<Eigen::Dynamic> perm(4);
  perm.indices() << 2, 0, 3, 1;
  const PostProcessing p1(perm * l1.kernel()), p2(perm * l2.kernel());
  EXPECT_NEAR(pp_fidelity(p1, p2), pp_fidelity(l1, l2), 1e-15);
}

TEST(Compose, IdentityAndMerge) {
  Rng rng(9);
  const PostProcessing l = random_kernel(4, 3, rng);
  EXPECT_LT((compose(PostProcessing::identity(3), l).kernel() - l.kernel()).cwiseAbs().maxCoeff(), 1e-15);
  const PostProcessing merged = compose(PostProcessing::all_merge(3), l);
  EXPECT_EQ(merged.n_in(), 4u);
  EXPECT_EQ(merged.n_out(), 1u);
  EXPECT_LT((merged.kernel() - PostProcessing::all_merge(4).kernel()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(compose(PostProcessing::identity(4), l), DimensionError);
}

TEST(Compose, ActsAsSequentialApplication) {
  Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const PostProcessing inner = random_kernel(5, 4, rng);
    const PostProcessing outer = random_kernel(4, 3, rng);
    const auto p = random_distribution(5, rng);
    const auto a = post_process_distribution(compose(outer, inner), p);
    const auto b = post_process_distribution(outer, post_process_distribution(inner, p));
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(a[j], b[j], 1e-12);
  }
}

TEST(Bhattacharyya, MonotoneUnderPostProcessing) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto p = random_distribution(n, rng);
    const auto q = random_distribution(n, rng);
    const PostProcessing l = random_kernel(n, 1 + trial % 4, rng);
    EXPECT_GE(bhattacharyya(post_process_distribution(l, p), post_process_distribution(l, q)),
              bhattacharyya(p, q) - 1e-12);
  }
}

}  // namespace
}  // namespace qmm
