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
#include "qmm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

#include "qmm/errors.hpp"
#include "qmm/random.hpp"

namespace qmm {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Tally {
 public:
  Tally(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
    result_.worst_margin = std::numeric_limits<double>::infinity();
  }

  void add(double margin) {
    margin += 0.0;  // normalizes -0.0
    ++result_.trials;
    if (margin < -result_.tolerance || std::isnan(margin)) ++result_.violations;
    result_.worst_margin = std::min(result_.worst_margin, margin);
  }

  CheckResult finish(std::string note = {}) {
    if (result_.trials == 0) result_.worst_margin = 0.0;
    result_.note = std::move(note);
    return result_;
  }

  CheckResult not_applicable(std::string note) {
    result_.applicable = false;
    result_.worst_margin = 0.0;
    result_.note = std::move(note);
    return result_;
  }

 private:
  CheckResult result_;
};

void absorb(VerificationReport& report, const CheckResult& c) {
  report.trials += c.trials;
  report.violations += c.violations;
  if (c.trials > 0) report.worst_margin = std::min(report.worst_margin, c.worst_margin);
  report.checks.push_back(c);
}

std::pair<ComplexVector, ComplexVector> random_pure_pair(std::size_t dim, Rng& rng) {
  ComplexVector a = random_unit_vector(dim, rng);
  ComplexVector b = random_unit_vector(dim, rng);
  return {std::move(a), std::move(b)};
}

Observable conjugate(const Observable& e, const ComplexMatrix& u) {
  std::vector<ComplexMatrix> effects;
  effects.reserve(e.size());
  for (const auto& m : e.effects()) effects.push_back(hermitian_part(dagger(u) * m * u));
  return Observable(e.labels(), std::move(effects), 1e-8);
}

// Shared body of the two programming inequalities; identity kernels are
// skipped so that prop3 with identities reproduces prop1 exactly.
VerificationReport programming_check(std::string name, const Multimeter& m,
                                     const DensityState& xi1, const DensityState& xi2,
                                     const PostProcessing* l1, const PostProcessing* l2,
                                     std::size_t trials, std::uint64_t seed,
                                     const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerificationReport report;
  report.check = std::move(name);
  report.seed = seed;
  report.tolerance = opts.tol_check;
  report.worst_margin = std::numeric_limits<double>::infinity();

  const Observable e1 = program(m, xi1);
  const Observable e2 = program(m, xi2);
  const double f_xi = fidelity(xi1, xi2);
  double f_l = 1.0;
  if (l1 != nullptr) {
    if (l1->n_in() != e1.size() || l2->n_in() != e2.size()) {
      throw DimensionError(report.check + ": kernel input size differs from pointer outcomes");
    }
    f_l = pp_fidelity(*l1, *l2);
  }
  report.metrics["F_xi"] = f_xi;
  if (l1 != nullptr) report.metrics["F_lambda"] = f_l;
  report.fixtures["system_dim"] = std::to_string(m.system_dim());
  report.fixtures["probe_dim"] = std::to_string(m.probe_dim());
  report.fixtures["pointer_outcomes"] = std::to_string(m.pointer().size());

  Rng rng(seed);
  for (std::size_t n = 0; n < trials; ++n) {
    const auto [psi1, psi2] = random_pure_pair(m.system_dim(), rng);
    Distribution p1 = outcome_distribution(e1, psi1);
    Distribution p2 = outcome_distribution(e2, psi2);
    if (l1 != nullptr) {
      p1 = post_process_distribution(*l1, p1);
      p2 = post_process_distribution(*l2, p2);
    }
    const double lhs = fidelity(psi1, psi2) * f_xi * f_l;
    const double margin = bhattacharyya(p1, p2) - lhs;
    ++report.trials;
    if (margin < -opts.tol_check) ++report.violations;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (opts.record_trials) report.margins.push_back(margin);
  }
  if (report.trials == 0) report.worst_margin = 0.0;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace

VerificationReport verify_prop1(const Multimeter& m, const DensityState& xi1,
                                const DensityState& xi2, std::size_t trials, std::uint64_t seed,
                                const VerifyOptions& opts) {
  return programming_check("prop1", m, xi1, xi2, nullptr, nullptr, trials, seed, opts);
}

VerificationReport verify_prop3(const Multimeter& m, const DensityState& xi1,
                                const DensityState& xi2, const PostProcessing& l1,
                                const PostProcessing& l2, std::size_t trials, std::uint64_t seed,
                                const VerifyOptions& opts) {
  return programming_check("prop3", m, xi1, xi2, &l1, &l2, trials, seed, opts);
}

VerificationReport verify_b_properties(const Observable& e1, const Observable& e2,
                                       std::size_t trials, std::uint64_t seed,
                                       const VerifyOptions& opts) {
  if (e1.dim() != e2.dim() || e1.size() != e2.size()) {
    throw DimensionError("verify_b_properties: observables differ in shape");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "bprops";
  report.seed = seed;
  report.tolerance = opts.tol_check;
  report.worst_margin = std::numeric_limits<double>::infinity();
  report.fixtures["dim"] = std::to_string(e1.dim());
  report.fixtures["outcomes"] = std::to_string(e1.size());

  const std::size_t dim = e1.dim();
  const double slack = opts.estimator_tolerance;
  DivergenceOptions dopts = opts.divergence;
  dopts.seed = seed;

  const DivergenceEstimate base = observable_divergence(e1, e2, dopts);
  const DivergenceEstimate swapped = observable_divergence(e2, e1, dopts);
  report.metrics["estimate"] = base.value;
  report.metrics["estimate_swapped"] = swapped.value;
  report.metrics["exact_zero"] = base.exact_zero ? 1.0 : 0.0;
  report.metrics["estimate_converged"] = base.converged ? 1.0 : 0.0;

  const bool equal = max_effect_diff(e1, e2) <= 1e-9;

  Tally b1("B1 swap symmetry", slack);
  Tally b2_range("B2 estimate range", 0.0);
  Tally b2_inf("B2 sampled infimum", slack);
  Tally b3("B3 equal observables", slack);
  Tally b4("B4 unitary invariance", slack);
  Tally b5("B5 channel surrogate", slack);
  Tally b5_dil("B5 dilation dual", 1e-10);
  Tally b6("B6 post-processing monotonicity", opts.pointwise_tolerance);

  auto record_estimate = [&](const DivergenceEstimate& est) {
    b2_range.add(std::min(est.value, 1.0 + 1e-9 - est.value));
    if (equal) b3.add(est.value - 1.0);
  };

  b1.add(-std::abs(base.value - swapped.value));
  record_estimate(base);
  record_estimate(swapped);

  Rng rng(seed);

  // Unitary transformations: invariance, and swap symmetry on each image.
  for (std::size_t n = 0; n < trials; ++n) {
    const ComplexMatrix u = random_unitary(dim, rng);
    const Observable f1 = conjugate(e1, u);
    const Observable f2 = conjugate(e2, u);
    const DivergenceEstimate a = observable_divergence(f1, f2, dopts);
    const DivergenceEstimate b = observable_divergence(f2, f1, dopts);
    b1.add(-std::abs(a.value - b.value));
    b4.add(-std::abs(a.value - base.value));
    record_estimate(a);
    record_estimate(b);
  }

  // Sampled ratios: the infimum cannot exceed 1.
  double min_ratio = std::numeric_limits<double>::infinity();
  try {
    min_ratio = divergence_ratio(e1, e2, base.rho1, base.rho2, dopts.min_fidelity);
  } catch (const NearOrthogonalError&) {
  }
  for (std::size_t n = 0; n < trials; ++n) {
    const auto [psi1, psi2] = random_pure_pair(dim, rng);
    const double f = fidelity(psi1, psi2);
    if (f < dopts.min_fidelity) continue;
    const double r =
        bhattacharyya(outcome_distribution(e1, psi1), outcome_distribution(e2, psi2)) / f;
    min_ratio = std::min(min_ratio, r);
  }
  b2_inf.add(1.0 - min_ratio);
  report.metrics["min_sampled_ratio"] = min_ratio;

  // Channels: any ratio of the pulled-back pair bounds the estimate from above.
  for (std::size_t n = 0; n < trials; ++n) {
    const QuantumChannel channel = random_channel(dim, 2, rng);
    const Observable f1 = dual_apply(channel, e1);
    const Observable f2 = dual_apply(channel, e2);
    const UnitaryDilation dilation = unitary_dilation(channel);
    double dil = 0.0;
    for (std::size_t x = 0; x < e1.size(); ++x) {
      dil = std::max(dil, max_abs_diff(dilation_dual(dilation, e1.effect(x)), f1.effect(x)));
      dil = std::max(dil, max_abs_diff(dilation_dual(dilation, e2.effect(x)), f2.effect(x)));
    }
    b5_dil.add(-dil);

    ComplexVector psi1, psi2;
    double f = 0.0;
    do {
      std::tie(psi1, psi2) = random_pure_pair(dim, rng);
      f = fidelity(psi1, psi2);
    } while (f < dopts.min_fidelity);
    const double r =
        bhattacharyya(outcome_distribution(f1, psi1), outcome_distribution(f2, psi2)) / f;
    b5.add(r - base.value);
  }

  // Kernels: pointwise monotonicity of the Bhattacharyya coefficient.
  std::uniform_int_distribution<std::size_t> outputs(1, e1.size() + 1);
  for (std::size_t n = 0; n < trials; ++n) {
    const PostProcessing l = random_kernel(e1.size(), outputs(rng), rng);
    const auto [psi1, psi2] = random_pure_pair(dim, rng);
    const Distribution p1 = outcome_distribution(e1, psi1);
    const Distribution p2 = outcome_distribution(e2, psi2);
    const double before = bhattacharyya(p1, p2);
    const double after =
        bhattacharyya(post_process_distribution(l, p1), post_process_distribution(l, p2));
    b6.add(after - before);
  }

  absorb(report, b1.finish());
  absorb(report, b2_range.finish());
  absorb(report, b2_inf.finish());
  absorb(report, equal ? b3.finish() : b3.not_applicable("observables differ"));
  absorb(report, b4.finish());
  absorb(report, b5.finish());
  absorb(report, b5_dil.finish());
  absorb(report, b6.finish());
  if (report.trials == 0) report.worst_margin = 0.0;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_fidelity_bound(std::size_t dim, std::size_t outcomes,
                                         std::size_t trials, std::uint64_t seed,
                                         const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "fidelity_bound";
  report.seed = seed;
  report.tolerance = opts.tol_check;
  report.worst_margin = std::numeric_limits<double>::infinity();
  report.fixtures["dim"] = std::to_string(dim);
  report.fixtures["outcomes"] = std::to_string(outcomes);

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> rank(1, dim);
  for (std::size_t n = 0; n < trials; ++n) {
    const Observable e = random_povm(dim, outcomes, rng);
    const DensityState rho1 = random_mixed_state(dim, rank(rng), rng);
    const DensityState rho2 = random_mixed_state(dim, rank(rng), rng);
    const double margin = bhattacharyya(outcome_distribution(e, rho1), outcome_distribution(e, rho2)) -
                          fidelity(rho1, rho2);
    ++report.trials;
    if (margin < -opts.tol_check) ++report.violations;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (opts.record_trials) report.margins.push_back(margin);
  }
  if (report.trials == 0) report.worst_margin = 0.0;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace qmm
