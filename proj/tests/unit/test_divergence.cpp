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

#include <cmath>

#include "oracles.hpp"
#include "qmm/divergence.hpp"
#include "qmm/errors.hpp"
#include "qmm/random.hpp"

namespace qmm {
namespace {

Observable smeared(double eta, const Eigen::Vector3d& a) {
  ComplexMatrix s = a.x() * oracle::pauli('x') + a.y() * oracle::pauli('y') + a.z() * oracle::pauli('z');
  return Observable({"+", "-"}, {0.5 * (identity(2) + eta * s), 0.5 * (identity(2) - eta * s)});
}

TEST(Bhattacharyya, Examples) {
  EXPECT_DOUBLE_EQ(bhattacharyya({1.0, 0.0}, {1.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(bhattacharyya({1.0, 0.0}, {0.0, 1.0}), 0.0);
  EXPECT_NEAR(bhattacharyya({0.5, 0.5}, {1.0, 0.0}), std::sqrt(0.5), 1e-15);
  EXPECT_THROW(bhattacharyya({0.5, 0.5}, {1.0}), DimensionError);
}

TEST(Bhattacharyya, MatchesOracleOnRandomDistributions) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_distribution(6, rng);
    const auto q = random_distribution(6, rng);
    const double b = bhattacharyya(p, q);
    EXPECT_NEAR(b, oracle::bhattacharyya(p, q), 1e-14);
    EXPECT_GE(b, 0.0);
    EXPECT_LE(b, 1.0 + 1e-15);
  }
}

TEST(DivergenceRatio, Examples) {
  const Observable z = Observable::from_basis(identity(2));
  const auto up = DensityState::basis(2, 0);
  EXPECT_NEAR(divergence_ratio(z, z, up, up), 1.0, 1e-15);
  ComplexVector plus(2);
  plus << 1.0, 1.0;
  const auto p = DensityState::pure(plus);
  // B = sqrt(1/2) for the outcome statistics, F = sqrt(1/2) for the states.
  EXPECT_NEAR(divergence_ratio(z, z, up, p), 1.0, 1e-12);
  const Observable x = smeared(1.0, Eigen::Vector3d::UnitX());
  EXPECT_NEAR(divergence_ratio(z, x, up, up), std::sqrt(0.5), 1e-12);
  EXPECT_THROW(divergence_ratio(z, z, up, DensityState::basis(2, 1)), NearOrthogonalError);
  EXPECT_THROW(divergence_ratio(z, Observable::trivial(2, 3), up, up), DimensionError);
}

TEST(ObservableDivergence, EqualObservablesGiveOne) {
  Rng rng(2);
  for (int trial = 0; trial < 3; ++trial) {
    const Observable e = random_povm(2, 3, rng);
    const auto est = observable_divergence(e, e);
    EXPECT_GE(est.value, 1.0 - 2e-3);
    EXPECT_LE(est.value, 1.0);
    EXPECT_FALSE(est.exact_zero);
  }
}

TEST(ObservableDivergence, SharpComplementaryPairIsZero) {
  const auto est = observable_divergence(smeared(1.0, Eigen::Vector3d::UnitZ()),
                                         smeared(1.0, Eigen::Vector3d::UnitX()));
  EXPECT_LT(est.value, 1e-4);
  EXPECT_TRUE(est.exact_zero);
  EXPECT_GE(fidelity(est.rho1, est.rho2), 1e-8);
}

TEST(ObservableDivergence, SmearedPairMatchesBruteForce) {
  const double eta = 0.5;
  const auto est = observable_divergence(smeared(eta, Eigen::Vector3d::UnitZ()),
                                         smeared(eta, Eigen::Vector3d::UnitX()));
  EXPECT_NEAR(est.value, oracle::smeared_qubit_grid(eta, 1000), 1e-3);
  EXPECT_FALSE(est.exact_zero);
}

TEST(ObservableDivergence, WitnessReproducesValue) {
  Rng rng(3);
  const Observable e1 = random_povm(2, 3, rng);
  const Observable e2 = random_povm(2, 3, rng);
  const auto est = observable_divergence(e1, e2);
  ASSERT_FALSE(est.exact_zero);
  EXPECT_NEAR(divergence_ratio(e1, e2, est.rho1, est.rho2), est.value, 1e-10);
  EXPECT_GE(est.value, 0.0);
  EXPECT_LE(est.value, 1.0);
  EXPECT_GT(est.evaluations, 0u);
  EXPECT_FALSE(est.method.empty());
}

TEST(ObservableDivergence, DeterministicForSeed) {
  Rng rng(4);
  const Observable e1 = random_povm(2, 2, rng);
  const Observable e2 = random_povm(2, 2, rng);
  DivergenceOptions opts;
  opts.seed = 17;
  const auto a = observable_divergence(e1, e2, opts);
  const auto b = observable_divergence(e1, e2, opts);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.seed, 17u);
}

TEST(ObservableDivergence, RejectsMismatchedObservables) {
  EXPECT_THROW(observable_divergence(Observable::trivial(2, 2), Observable::trivial(3, 2)), DimensionError);
  EXPECT_THROW(observable_divergence(Observable::trivial(2, 2), Observable::trivial(2, 3)), DimensionError);
}

}  // namespace
}  // namespace qmm
