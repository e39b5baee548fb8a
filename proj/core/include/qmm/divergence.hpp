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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qmm/quantum.hpp"

namespace qmm {

/// sum_i sqrt(p_i q_i). Throws DimensionError on length mismatch and
/// DomainError unless both vectors are normalized within 1e-9.
double bhattacharyya(const Distribution& p, const Distribution& q);

/// B(p^{e1}_{rho1}, p^{e2}_{rho2}) / F(rho1, rho2). Throws NearOrthogonalError
/// when F(rho1, rho2) < min_fidelity.
double divergence_ratio(const Observable& e1, const Observable& e2, const DensityState& rho1,
                        const DensityState& rho2, double min_fidelity = 1e-8);

struct DivergenceOptions {
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  std::size_t max_iterations = 4000;
  double improvement_tolerance = 1e-9;
  std::size_t stall_iterations = 100;
  /// Pairs with fidelity below this are excluded from the objective.
  double min_fidelity = 1e-8;
  /// Any evaluated ratio below this is reported as an exact zero.
  double zero_threshold = 1e-10;
  /// Outcome probabilities at or below this are treated as zero inside the
  /// objective, so disjoint supports evaluate to exactly zero.
  double probability_floor = 1e-12;
  /// Local searches started from the best effect-eigenvector pairs.
  std::size_t structured_starts = 4;
  /// Polar grid points per state for the qubit grid refinement (0 disables).
  std::size_t bloch_grid = 8;
};

/// Upper estimate of inf_{rho1, rho2} B(p^{e1}_{rho1}, p^{e2}_{rho2}) / F(rho1, rho2)
/// restricted to pure state pairs.
struct DivergenceEstimate {
  double value = 1.0;
  DensityState rho1;
  DensityState rho2;
  std::string method;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
  std::size_t evaluations = 0;
  bool converged = false;
  bool exact_zero = false;
};

DivergenceEstimate observable_divergence(const Observable& e1, const Observable& e2,
                                         const DivergenceOptions& opts = {});

}  // namespace qmm
