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

#include "qmm/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qmm {

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  NelderMeadResult result;
  if (n == 0) {
    result.value = f(x0);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }

  const double nd = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / nd;
  const double rho = 0.75 - 1.0 / (2.0 * nd);
  const double sigma = 1.0 - 1.0 / nd;

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) {
    const double step = x0[i] != 0.0 ? opts.initial_step * std::max(1.0, std::abs(x0[i]))
                                     : opts.initial_step;
    simplex[i + 1][i] += step;
  }
  std::vector<double> values(n + 1);
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> idx(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  double last_best = std::numeric_limits<double>::infinity();
  std::size_t stalled = 0;

  auto affine = [&](std::vector<double>& out, double t, const std::vector<double>& worst) {
    for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + t * (worst[k] - centroid[k]);
  };

  for (result.iterations = 0; result.iterations < opts.max_iterations; ++result.iterations) {
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = idx.front();
    const std::size_t worst = idx.back();
    const std::size_t second_worst = idx[n - 1];

    if (last_best - values[best] > opts.improvement_tolerance) {
      last_best = values[best];
      stalled = 0;
    } else if (++stalled >= opts.stall_iterations) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / nd;
    }

    affine(trial, -alpha, simplex[worst]);
    const double f_reflect = eval(trial);
    if (f_reflect < values[best]) {
      affine(trial2, -alpha * gamma, simplex[worst]);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[second_worst]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    const bool outside = f_reflect < values[worst];
    affine(trial2, outside ? -alpha * rho : rho, simplex[worst]);
    const double f_contract = eval(trial2);
    if (f_contract < (outside ? f_reflect : values[worst])) {
      simplex[worst] = trial2;
      values[worst] = f_contract;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) {
        simplex[i][k] = simplex[best][k] + sigma * (simplex[i][k] - simplex[best][k]);
      }
      values[i] = eval(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  result.value = *best_it;
  result.x = simplex[static_cast<std::size_t>(best_it - values.begin())];
  return result;
}

}  // namespace qmm
