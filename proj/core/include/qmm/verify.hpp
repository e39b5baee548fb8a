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
#include <map>
#include <string>
#include <vector>

#include "qmm/divergence.hpp"
#include "qmm/postprocessing.hpp"
#include "qmm/quantum.hpp"

namespace qmm {

/// One inequality checked over a number of trials. A trial is a violation
/// when its margin (right-hand side minus left-hand side) is below
/// -tolerance.
struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  bool applicable = true;
  std::string note;

  bool passed() const { return violations == 0; }
};

struct VerificationReport {
  std::string check;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  double elapsed_seconds = 0.0;
  /// Named scalar quantities computed along the way (fidelities, estimates).
  std::map<std::string, double> metrics;
  /// Free-form description of the inputs.
  std::map<std::string, std::string> fixtures;
  /// Sub-checks of an aggregated report; empty for single inequalities.
  std::vector<CheckResult> checks;
  /// Per-trial margins, filled only when requested.
  std::vector<double> margins;

  bool passed() const { return violations == 0; }
};

struct VerifyOptions {
  double tol_check = 1e-9;
  /// Slack for comparisons that involve optimizer estimates.
  double estimator_tolerance = 2e-3;
  /// Slack for the pointwise post-processing monotonicity check.
  double pointwise_tolerance = 1e-12;
  bool record_trials = false;
  DivergenceOptions divergence{};
};

/// F(rho1, rho2) F(xi1, xi2) <= B(p^{E1}_{rho1}, p^{E2}_{rho2}) for random pure
/// pairs, with E_i = program(m, xi_i).
VerificationReport verify_prop1(const Multimeter& m, const DensityState& xi1,
                                const DensityState& xi2, std::size_t trials, std::uint64_t seed,
                                const VerifyOptions& opts = {});

/// F(rho1, rho2) F(xi1, xi2) F(l1, l2) <= B(l1 * p^{E1}_{rho1}, l2 * p^{E2}_{rho2}).
/// With identity kernels the margins coincide with verify_prop1 for the same seed.
VerificationReport verify_prop3(const Multimeter& m, const DensityState& xi1,
                                const DensityState& xi2, const PostProcessing& l1,
                                const PostProcessing& l2, std::size_t trials, std::uint64_t seed,
                                const VerifyOptions& opts = {});

/// Properties of the divergence estimate: swap symmetry, range, the equality
/// case, unitary invariance, the channel surrogate (with a dilation
/// cross-check of the dual map) and pointwise post-processing monotonicity.
/// `trials` transformations are sampled for each property.
VerificationReport verify_b_properties(const Observable& e1, const Observable& e2,
                                       std::size_t trials, std::uint64_t seed,
                                       const VerifyOptions& opts = {});

/// B(p^E_{rho1}, p^E_{rho2}) >= F(rho1, rho2) for random POVMs and mixed states.
VerificationReport verify_fidelity_bound(std::size_t dim, std::size_t outcomes,
                                         std::size_t trials, std::uint64_t seed,
                                         const VerifyOptions& opts = {});

}  // namespace qmm
