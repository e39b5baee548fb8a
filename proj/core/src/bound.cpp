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

#include "qmm/bound.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qmm/errors.hpp"

namespace qmm {

namespace {

struct Scales {
  double plus;   // 1/sqrt(1+t), or +inf-excluded when t = -1
  double minus;  // 1/sqrt(1-t), or excluded when t = 1
  bool use_plus;
  bool use_minus;
};

Scales scales_for(double t) {
  if (!(std::abs(t) <= 1.0)) {
    throw DomainError("sharpmin: |t| must be at most 1");
  }
  Scales s{};
  s.use_plus = t > -1.0;
  s.use_minus = t < 1.0;
  s.plus = s.use_plus ? 1.0 / std::sqrt(1.0 + t) : 0.0;
  s.minus = s.use_minus ? 1.0 / std::sqrt(1.0 - t) : 0.0;
  return s;
}

double combine(const Scales& s, double t1, double t2, double t3, double t4) {
  double v = std::numeric_limits<double>::infinity();
  if (s.use_plus) v = std::min({v, s.plus * t1, s.plus * t4});
  if (s.use_minus) v = std::min({v, s.minus * t2, s.minus * t3});
  return v;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double sharpmin_objective(double t, const std::array<double, 4>& abce) {
  const Scales s = scales_for(t);
  const double a = clamp01(abce[0]), b = clamp01(abce[1]), c = clamp01(abce[2]),
               e = clamp01(abce[3]);
  return combine(s, std::sqrt(2.0 * a * c), std::sqrt(2.0 * (1.0 - a) * e),
                 std::sqrt(2.0 * b * (1.0 - c)), std::sqrt(2.0 * (1.0 - b) * (1.0 - e)));
}

SharpminResult sharpmin_search(double t, const SharpminOptions& opts) {
  const Scales s = scales_for(t);
  const std::size_t n = std::max<std::size_t>(opts.grid_points, 2);
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = static_cast<double>(k) / static_cast<double>(n - 1);

  // Each term depends on two coordinates only; tabulate them.
  std::vector<double> ac(n * n), ae(n * n), bc(n * n), be(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ac[i * n + j] = std::sqrt(2.0 * g[i] * g[j]);
      ae[i * n + j] = std::sqrt(2.0 * (1.0 - g[i]) * g[j]);
      bc[i * n + j] = std::sqrt(2.0 * g[i] * (1.0 - g[j]));
      be[i * n + j] = std::sqrt(2.0 * (1.0 - g[i]) * (1.0 - g[j]));
    }
  }

  const std::size_t keep = std::max<std::size_t>(opts.refine_starts, 1);
  std::vector<std::pair<double, std::array<std::size_t, 4>>> top;  // descending by value
  SharpminResult result;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const double t1 = ac[a * n + c];
        const double t3 = bc[b * n + c];
        for (std::size_t e = 0; e < n; ++e) {
          const double v = combine(s, t1, ae[a * n + e], t3, be[b * n + e]);
          ++result.evaluations;
          if (top.size() < keep || v > top.back().first) {
            std::array<std::size_t, 4> at{a, b, c, e};
            auto it = std::find_if(top.begin(), top.end(),
                                   [v](const auto& p) { return v > p.first; });
            top.insert(it, {v, at});
            if (top.size() > keep) top.pop_back();
          }
        }
      }
    }
  }

  const auto& best = top.front();
  result.grid_value = best.first;
  result.value = best.first;
  result.argmax = {g[best.second[0]], g[best.second[1]], g[best.second[2]], g[best.second[3]]};

  if (opts.refine) {
    // The objective is a minimum of concave functions, hence concave: a
    // shrinking lattice around the incumbent converges to the maximum.
    for (const auto& start : top) {
      std::array<double, 4> x{g[start.second[0]], g[start.second[1]], g[start.second[2]],
                              g[start.second[3]]};
      double fx = start.first;
      double radius = 1.0 / static_cast<double>(n - 1);
      constexpr int kHalf = 3;
      while (radius > 1e-13) {
        const double step = radius / kHalf;
        std::array<double, 4> best_x = x;
        double best_f = fx;
        std::array<int, 4> o{};
        for (o[0] = -kHalf; o[0] <= kHalf; ++o[0]) {
          for (o[1] = -kHalf; o[1] <= kHalf; ++o[1]) {
            for (o[2] = -kHalf; o[2] <= kHalf; ++o[2]) {
              for (o[3] = -kHalf; o[3] <= kHalf; ++o[3]) {
                std::array<double, 4> y;
                for (int k = 0; k < 4; ++k) y[k] = clamp01(x[k] + o[k] * step);
                const double fy = sharpmin_objective(t, y);
                ++result.evaluations;
                if (fy > best_f) {
                  best_f = fy;
                  best_x = y;
                }
              }
            }
          }
        }
        if (best_f > fx) {
          x = best_x;
          fx = best_f;
        } else {
          radius /= 2.0;
        }
      }
      if (fx > result.value) {
        result.value = fx;
        result.argmax = x;
      }
    }
  }
  return result;
}

double sharpmin_bound(double t) { return sharpmin_search(t).value; }

BoundCurve sharpmin_curve(std::size_t points, const SharpminOptions& opts) {
  if (points < 2) throw DomainError("sharpmin_curve: need at least two points");
  BoundCurve curve;
  for (std::size_t i = 0; i < points; ++i) {
    double t = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(points - 1);
    if (i + 1 == points) t = 1.0;
    auto r = sharpmin_search(t, opts);
    curve.t.push_back(t);
    curve.bound.push_back(r.value);
    curve.details.push_back(r);
  }
  return curve;
}

std::string to_csv(const BoundCurve& curve) {
  std::ostringstream out;
  out << "t,bound\n";
  char buf[64];
  for (std::size_t i = 0; i < curve.t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g\n", curve.t[i], curve.bound[i]);
    out << buf;
  }
  return out.str();
}

}  // namespace qmm
