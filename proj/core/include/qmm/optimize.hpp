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
#include <functional>
#include <span>
#include <vector>

namespace qmm {

struct NelderMeadOptions {
  std::size_t max_iterations = 4000;
  /// Converged once the best value improved by less than this over
  /// `stall_iterations` consecutive iterations.
  double improvement_tolerance = 1e-9;
  std::size_t stall_iterations = 100;
  double initial_step = 0.25;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free simplex minimization with dimension-adaptive coefficients.
/// The objective may return +infinity to mark excluded points.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts = {});

}  // namespace qmm
