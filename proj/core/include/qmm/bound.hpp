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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qmm {

// Upper bound on the fidelity of programming states for a pair of sharp
// qubit observables with Bloch directions a1, a2, as a function of
// t = a1 . a2: the maximum over (a, b, c, e) in [0,1]^4 of
//
//   min( sqrt(2ac/(1+t)), sqrt(2(1-a)e/(1-t)), sqrt(2b(1-c)/(1-t)), sqrt(2(1-b)(1-e)/(1+t)) )
//
// where a = p+(y), b = p-(y), c = q+(x), e = q-(x). Terms whose denominator
// vanishes at |t| = 1 are dropped from the minimum.

struct SharpminOptions {
  std::size_t grid_points = 41;  // per axis
  bool refine = true;
  std::size_t refine_starts = 4; // local searches from the best lattice points
};

struct SharpminResult {
  double value = 0.0;
  std::array<double, 4> argmax{};  // (a, b, c, e)
  double grid_value = 0.0;         // best lattice value before refinement
  std::size_t evaluations = 0;
};

/// The objective itself: min of the (non-divergent) terms at one point.
double sharpmin_objective(double t, const std::array<double, 4>& abce);

/// Throws DomainError for |t| > 1.
SharpminResult sharpmin_search(double t, const SharpminOptions& opts = {});
double sharpmin_bound(double t);

struct BoundCurve {
  std::vector<double> t;
  std::vector<double> bound;
  std::vector<SharpminResult> details;
};

/// Evenly spaced sweep over [-1, 1]; `points` >= 2.
BoundCurve sharpmin_curve(std::size_t points, const SharpminOptions& opts = {});

/// "t,bound" header followed by one row per point, 9 significant digits.
std::string to_csv(const BoundCurve& curve);

}  // namespace qmm
