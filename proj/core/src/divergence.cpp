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

#include "qmm/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qmm/errors.hpp"
#include "qmm/optimize.hpp"
#include "qmm/random.hpp"

namespace qmm {

double bhattacharyya(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionError("bhattacharyya: lengths " + std::to_string(p.size()) + " and " +
                         std::to_string(q.size()) + " differ");
  }
  double sp = 0.0, sq = 0.0, b = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < -1e-12 || q[i] < -1e-12) throw DomainError("bhattacharyya: negative entry");
    sp += p[i];
    sq += q[i];
    b += std::sqrt(std::max(0.0, p[i]) * std::max(0.0, q[i]));
  }
  if (std::abs(sp - 1.0) > 1e-9 || std::abs(sq - 1.0) > 1e-9) {
    throw DomainError("bhattacharyya: inputs must be normalized");
  }
  return std::min(b, 1.0);
}

double divergence_ratio(const Observable& e1, const Observable& e2, const DensityState& rho1,
                        const DensityState& rho2, double min_fidelity) {
  if (e1.size() != e2.size()) throw DimensionError("divergence_ratio: outcome counts differ");
  const double f = fidelity(rho1, rho2);
  if (f < min_fidelity) {
    throw NearOrthogonalError("divergence_ratio: F(rho1, rho2) = " + std::to_string(f) +
                              " is below the exclusion band");
  }
  return bhattacharyya(outcome_distribution(e1, rho1), outcome_distribution(e2, rho2)) / f;
}

namespace {

constexpr double kExcluded = std::numeric_limits<double>::infinity();

// Ratio over pure pairs with best-point bookkeeping across every evaluation.
class PairObjective {
 public:
  PairObjective(const Observable& e1, const Observable& e2, const DivergenceOptions& opts)
      : e1_(e1), e2_(e2), opts_(opts), dim_(static_cast<Eigen::Index>(e1.dim())) {}

  Eigen::Index dim() const { return dim_; }

  double ratio(const ComplexVector& a, const ComplexVector& b, bool floored = true) {
    ++evaluations_;
    const double f = std::abs(a.dot(b));
    if (!(f >= opts_.min_fidelity)) return kExcluded;
    double sum = 0.0;
    for (std::size_t x = 0; x < e1_.size(); ++x) {
      double p = a.dot(e1_.effect(x) * a).real();
      double q = b.dot(e2_.effect(x) * b).real();
      if (floored) {
        if (p <= opts_.probability_floor) p = 0.0;
        if (q <= opts_.probability_floor) q = 0.0;
      }
      sum += std::sqrt(std::max(0.0, p) * std::max(0.0, q));
    }
    const double r = sum / std::min(f, 1.0);
    if (r < best_) {
      best_ = r;
      best_a_ = a;
      best_b_ = b;
      best_run_ = run_;
    }
    return r;
  }

  double operator()(std::span<const double> x) {
    ComplexVector a(dim_), b(dim_);
    for (Eigen::Index i = 0; i < dim_; ++i) {
      a(i) = Complex{x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(dim_ + i)]};
      b(i) = Complex{x[static_cast<std::size_t>(2 * dim_ + i)],
                     x[static_cast<std::size_t>(3 * dim_ + i)]};
    }
    const double na = a.norm(), nb = b.norm();
    if (na < 1e-12 || nb < 1e-12) return kExcluded;
    return ratio(a / na, b / nb);
  }

  std::vector<double> encode(const ComplexVector& a, const ComplexVector& b) const {
    std::vector<double> x(static_cast<std::size_t>(4 * dim_));
    for (Eigen::Index i = 0; i < dim_; ++i) {
      x[static_cast<std::size_t>(i)] = a(i).real();
      x[static_cast<std::size_t>(dim_ + i)] = a(i).imag();
      x[static_cast<std::size_t>(2 * dim_ + i)] = b(i).real();
      x[static_cast<std::size_t>(3 * dim_ + i)] = b(i).imag();
    }
    return x;
  }

  void set_run(std::size_t r) { run_ = r; }
  double best() const { return best_; }
  const ComplexVector& best_a() const { return best_a_; }
  const ComplexVector& best_b() const { return best_b_; }
  std::size_t best_run() const { return best_run_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  const Observable& e1_;
  const Observable& e2_;
  const DivergenceOptions& opts_;
  Eigen::Index dim_;
  double best_ = kExcluded;
  ComplexVector best_a_, best_b_;
  std::size_t run_ = 0;
  std::size_t best_run_ = 0;
  std::size_t evaluations_ = 0;
};

ComplexVector top_eigenvector(const ComplexMatrix& m) {
  return hermitian_eig(m, 1e-9).vectors.col(0);
}

ComplexVector bloch_vector(double theta, double phi) {
  ComplexVector v(2);
  v(0) = std::cos(theta / 2.0);
  v(1) = std::polar(std::sin(theta / 2.0), phi);
  return v;
}

}  // namespace

DivergenceEstimate observable_divergence(const Observable& e1, const Observable& e2,
                                         const DivergenceOptions& opts) {
  if (e1.dim() != e2.dim() || e1.size() != e2.size()) {
    throw DimensionError("observable_divergence: observables must share dimension and outcomes");
  }
  PairObjective objective(e1, e2, opts);
  const Objective fn = [&objective](std::span<const double> x) { return objective(x); };
  NelderMeadOptions nm;
  nm.max_iterations = opts.max_iterations;
  nm.improvement_tolerance = opts.improvement_tolerance;
  nm.stall_iterations = opts.stall_iterations;

  // Converged flag per run; run 0 collects the scanning evaluations.
  std::vector<bool> run_converged{true};
  auto polish = [&](const ComplexVector& a, const ComplexVector& b) {
    objective.set_run(run_converged.size());
    const auto res = nelder_mead(fn, objective.encode(a, b), nm);
    run_converged.push_back(res.converged);
  };
  std::string method = "nelder-mead multistart over pure state pairs (upper bound)";

  // Starts from top eigenvectors of effect pairs; these contain the
  // disjoint-support witnesses of sharp observables.
  if (opts.structured_starts > 0) {
    objective.set_run(0);
    std::vector<ComplexVector> tops1, tops2;
    for (const auto& e : e1.effects()) tops1.push_back(top_eigenvector(e));
    for (const auto& e : e2.effects()) tops2.push_back(top_eigenvector(e));
    std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> scored;
    for (std::size_t x = 0; x < tops1.size(); ++x) {
      for (std::size_t y = 0; y < tops2.size(); ++y) {
        scored.push_back({objective.ratio(tops1[x], tops2[y]), {x, y}});
      }
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const std::size_t count = std::min(opts.structured_starts, scored.size());
    for (std::size_t s = 0; s < count && objective.best() >= opts.zero_threshold; ++s) {
      if (!std::isfinite(scored[s].first)) break;
      polish(tops1[scored[s].second.first], tops2[scored[s].second.second]);
    }
    method += ", effect-eigenvector starts";
  }

  if (e1.dim() == 2 && opts.bloch_grid >= 2 && objective.best() >= opts.zero_threshold) {
    objective.set_run(0);
    std::vector<ComplexVector> grid;
    const std::size_t polar = opts.bloch_grid;
    for (std::size_t k = 0; k < polar; ++k) {
      const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(polar - 1);
      const std::size_t azimuth = (k == 0 || k + 1 == polar) ? 1 : 2 * polar;
      for (std::size_t l = 0; l < azimuth; ++l) {
        grid.push_back(bloch_vector(theta, 2.0 * std::numbers::pi * static_cast<double>(l) /
                                               static_cast<double>(azimuth)));
      }
    }
    double best = kExcluded;
    std::size_t ba = 0, bb = 0;
    for (std::size_t a = 0; a < grid.size(); ++a) {
      for (std::size_t b = 0; b < grid.size(); ++b) {
        const double r = objective.ratio(grid[a], grid[b]);
        if (r < best) {
          best = r;
          ba = a;
          bb = b;
        }
      }
    }
    if (std::isfinite(best)) polish(grid[ba], grid[bb]);
    method += ", bloch-grid refinement";
  }

  Rng rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t r = 0; r < opts.restarts && objective.best() >= opts.zero_threshold; ++r) {
    ComplexVector a(objective.dim()), b(objective.dim());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      a(i) = Complex{re, im};
    }
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      b(i) = Complex{re, im};
    }
    polish(a / a.norm(), b / b.norm());
  }

  if (!std::isfinite(objective.best())) {
    throw DomainError("observable_divergence: every evaluated pair was excluded");
  }
  const ComplexVector a = objective.best_a();
  const ComplexVector b = objective.best_b();
  const bool exact_zero = objective.best() < opts.zero_threshold;
  // Report the unfloored ratio so the estimate recomputes from its argmin.
  const double raw = exact_zero ? 0.0 : objective.ratio(a, b, /*floored=*/false);

  return DivergenceEstimate{
      .value = std::clamp(raw, 0.0, 1.0 + 1e-9),
      .rho1 = DensityState::pure(a),
      .rho2 = DensityState::pure(b),
      .method = method,
      .restarts = opts.restarts,
      .seed = opts.seed,
      .evaluations = objective.evaluations(),
      .converged = run_converged[objective.best_run()],
      .exact_zero = exact_zero,
  };
}

}  // namespace qmm
