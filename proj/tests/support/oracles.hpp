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

// Independent reference computations used by the unit and acceptance tests.
// Everything here is deliberately naive: explicit index loops and grids.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "qmm/linalg.hpp"
#include "qmm/postprocessing.hpp"
#include "qmm/quantum.hpp"

namespace qmm::oracle {

inline ComplexMatrix pauli(char axis) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  const Complex i{0.0, 1.0};
  if (axis == 'x') {
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
  } else if (axis == 'y') {
    s(0, 1) = -i;
    s(1, 0) = i;
  } else {
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
  }
  return s;
}

/// {(1 + sigma)/2, (1 - sigma)/2}.
inline std::vector<ComplexMatrix> pauli_pvm(char axis) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return {(id + pauli(axis)) / 2.0, (id - pauli(axis)) / 2.0};
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Partial trace by enumerating multi-indices; `keep` ascending.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                   const std::vector<std::size_t>& keep) {
  const std::size_t n = dims.size();
  std::size_t total = 1, kept = 1;
  for (auto d : dims) total *= d;
  for (auto k : keep) kept *= dims[k];
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> dg(n);
    for (std::size_t s = n; s-- > 0;) {
      dg[s] = idx % dims[s];
      idx /= dims[s];
    }
    return dg;
  };
  auto kept_index = [&](const std::vector<std::size_t>& dg) {
    std::size_t idx = 0;
    for (auto k : keep) idx = idx * dims[k] + dg[k];
    return idx;
  };
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(kept),
                                          static_cast<Eigen::Index>(kept));
  for (std::size_t r = 0; r < total; ++r) {
    const auto dr = digits(r);
    for (std::size_t c = 0; c < total; ++c) {
      const auto dc = digits(c);
      bool traced_equal = true;
      for (std::size_t s = 0; s < n && traced_equal; ++s) {
        if (std::find(keep.begin(), keep.end(), s) == keep.end() && dr[s] != dc[s]) {
          traced_equal = false;
        }
      }
      if (!traced_equal) continue;
      out(static_cast<Eigen::Index>(kept_index(dr)), static_cast<Eigen::Index>(kept_index(dc))) +=
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

/// Effects read off in the Schrodinger picture:
/// E(x)_{ji} = tr[(1 (x) Z(x)) V(|i><j| (x) xi)] over the matrix units |i><j|.
inline std::vector<ComplexMatrix> schrodinger_effects(const MeasurementModel& model) {
  const auto& dev = model.device();
  const auto d = static_cast<Eigen::Index>(dev.system_dim());
  std::vector<ComplexMatrix> effects(dev.pointer().size(), ComplexMatrix::Zero(d, d));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(i, j) = 1.0;
      const ComplexMatrix evolved = dev.interaction().apply(kron(unit, model.probe_state().matrix()));
      for (std::size_t x = 0; x < effects.size(); ++x) {
        const ComplexMatrix lifted = kron(ComplexMatrix::Identity(d, d), dev.pointer().effect(x));
        effects[x](j, i) = (lifted * evolved).trace();
      }
    }
  }
  return effects;
}

/// Points of the barycentric lattice with `subdivisions` steps on the
/// simplex of dimension n - 1.
inline std::vector<std::vector<double>> simplex_grid(std::size_t n, std::size_t subdivisions) {
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> counts(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == n) {
      counts[pos] = left;
      std::vector<double> p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = static_cast<double>(counts[i]) / static_cast<double>(subdivisions);
      }
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, subdivisions);
  return out;
}

inline double bhattacharyya(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::sqrt(std::max(0.0, p[i] * q[i]));
  return s;
}

inline std::vector<double> push(const PostProcessing& l, const std::vector<double>& p) {
  std::vector<double> out(l.n_out(), 0.0);
  for (std::size_t i = 0; i < l.n_in(); ++i)
    for (std::size_t j = 0; j < l.n_out(); ++j) out[j] += l(i, j) * p[i];
  return out;
}

/// Infimum over a simplex grid of B(l1 * p, l2 * p), returned together with
/// the grid values.
inline std::vector<double> kernel_grid_values(const PostProcessing& l1, const PostProcessing& l2,
                                              std::size_t subdivisions) {
  std::vector<double> values;
  for (const auto& p : simplex_grid(l1.n_in(), subdivisions)) {
    values.push_back(bhattacharyya(push(l1, p), push(l2, p)));
  }
  return values;
}

/// Brute-force divergence of the smeared qubit pair E_i(+-) = (1 +- eta a_i.sigma)/2
/// with a1 orthogonal to a2. The ratio depends on the Bloch vectors only
/// through u_i = a_i . r_i and the largest r1 . r2 compatible with them, so a
/// grid over (u1, u2) stands for the full pair of spheres.
inline double smeared_qubit_grid(double eta, std::size_t points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points; ++i) {
    const double u1 = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(points - 1);
    for (std::size_t j = 0; j < points; ++j) {
      const double u2 = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(points - 1);
      const double c = (u1 * u1 + u2 * u2 <= 1.0)
                           ? 1.0
                           : std::abs(u1) * std::sqrt(std::max(0.0, 1.0 - u2 * u2)) +
                                 std::sqrt(std::max(0.0, 1.0 - u1 * u1)) * std::abs(u2);
      const double f = std::sqrt((1.0 + c) / 2.0);
      if (f < 1e-8) continue;
      const double b = 0.5 * (std::sqrt((1.0 + eta * u1) * (1.0 + eta * u2)) +
                              std::sqrt((1.0 - eta * u1) * (1.0 - eta * u2)));
      best = std::min(best, b / f);
    }
  }
  return best;
}

/// Exact maximum of the four-term sharp-observable bound. A weighted sum of
/// the terms with weights sqrt(1+t), sqrt(1-t), sqrt(1-t), sqrt(1+t) is at
/// most 2 sqrt(2) by Cauchy-Schwarz, and a = c = sqrt(1+t)/(sqrt(1+t)+sqrt(1-t)),
/// b = e = 1 - a equalizes all four terms.
inline double sharpmin_exact(double t) {
  return std::sqrt(2.0) / (std::sqrt(1.0 + t) + std::sqrt(1.0 - t));
}

}  // namespace qmm::oracle
