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
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qmm/bound.hpp"
#include "qmm/covariant.hpp"
#include "qmm/demos.hpp"
#include "qmm/divergence.hpp"
#include "qmm/group.hpp"
#include "qmm/postprocessing.hpp"
#include "qmm/random.hpp"
#include "qmm/verify.hpp"

namespace {

using namespace qmm;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Programming fixture built from a covariant multimeter: two eigenvector
// programs and their coset kernels.
struct Fixture {
  std::string name;
  Multimeter device;
  DensityState xi1, xi2;
  PostProcessing l1, l2;
};

Fixture quaternion_fixture() {
  const auto rep = q8_representation();
  const auto& g = rep.group();
  const auto eta = DensityState::basis(2, 0);
  auto state = [&](const char* gen) {
    const auto psi = eigenvector_program_states(rep, g.at(gen)).vectors.front();
    return covariant_program_state(eta, DensityState::pure(psi));
  };
  return {"q8", covariant_multimeter(rep), state("i"), state("k"),
          coset_postprocessing(g, cyclic_subgroup(g, g.at("i"))),
          coset_postprocessing(g, cyclic_subgroup(g, g.at("k")))};
}

Fixture phase_space_fixture(std::size_t d) {
  const auto rep = weyl_heisenberg(d);
  const auto programs = phase_space_programs(rep);
  const auto eta = DensityState::basis(d, 0);
  auto state = [&](std::size_t i) {
    return covariant_program_state(eta, DensityState::pure(programs[i].vector));
  };
  return {"phase-space", covariant_multimeter(rep), state(0), state(1),
          coset_postprocessing(rep.group(), programs[0].subgroup),
          coset_postprocessing(rep.group(), programs[1].subgroup)};
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = quaternion_demo();
  const double elapsed = seconds_since(t0);
  o.require(r.max_pvm_error <= 1e-9, "pvm error " + fmt("%.3g", r.max_pvm_error));
  o.require(r.max_fidelity_error <= 1e-10, "fidelity error " + fmt("%.3g", r.max_fidelity_error));
  o.require(elapsed < 1.0, "runtime " + fmt("%.3g", elapsed) + " s");
  o.detail = o.pass ? "pvm error " + fmt("%.2e", r.max_pvm_error) + ", fidelity error " +
                          fmt("%.2e", r.max_fidelity_error) + ", " + fmt("%.3f", elapsed) + " s"
                    : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::string summary;
  for (std::size_t d : {3u, 5u, 7u}) {
    const auto t0 = Clock::now();
    const auto r = phase_space_demo(d);
    const double elapsed = seconds_since(t0);
    const std::string tag = "d=" + std::to_string(d);
    o.require(r.outputs.size() == d + 1, tag + " wrong program count");
    o.require(r.max_overlap_error <= 1e-8, tag + " overlap error " + fmt("%.3g", r.max_overlap_error));
    o.require(r.max_pvm_defect <= 1e-8, tag + " pvm defect " + fmt("%.3g", r.max_pvm_defect));
    o.require(r.max_rank_defect <= 1e-8, tag + " rank defect " + fmt("%.3g", r.max_rank_defect));
    if (d == 7) o.require(elapsed < 10.0, "d=7 runtime " + fmt("%.3g", elapsed) + " s");
    summary += tag + " " + fmt("%.3f", elapsed) + " s ";
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome criterion3() {
  Outcome o;
  Rng rng(3);
  double worst = 0.0, worst_sum = 0.0;
  for (const auto& rep : {q8_representation(), weyl_heisenberg(3)}) {
    const Multimeter m = covariant_multimeter(rep);
    const std::size_t d = rep.degree();
    std::uniform_int_distribution<std::size_t> pick(0, rep.group().order() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const auto rho = random_mixed_state(d, 1 + trial % d, rng);
      const auto xi = random_mixed_state(d, 1 + (trial / 3) % d, rng);
      const std::size_t g = pick(rng);
      const Complex lhs =
          (m.pointer().effect(g) * tensor(rho.matrix(), xi.matrix().transpose().eval())).trace();
      const Complex rhs = (covariant_observable(rep, xi).effect(g) * rho.matrix()).trace();
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    ComplexMatrix sum = ComplexMatrix::Zero(d * d, d * d);
    for (const auto& z : m.pointer().effects()) sum += z;
    worst_sum = std::max(worst_sum, max_abs_diff(sum, identity(d * d)));
  }
  o.require(worst <= 1e-10, "statistics mismatch " + fmt("%.3g", worst));
  o.require(worst_sum <= 1e-9, "pointer sum " + fmt("%.3g", worst_sum));
  if (o.pass) o.detail = "max mismatch " + fmt("%.2e", worst) + ", pointer sum " + fmt("%.2e", worst_sum);
  return o;
}

std::vector<Fixture> programming_fixtures() {
  std::vector<Fixture> fx{quaternion_fixture(), phase_space_fixture(3)};
  Rng rng(4);
  const Multimeter m = random_multimeter(2, 4, rng);
  const std::size_t n = m.pointer().size();
  fx.push_back({"random", m, random_mixed_state(4, 2, rng), random_mixed_state(4, 3, rng),
                random_kernel(n, 3, rng), random_kernel(n, 3, rng)});
  return fx;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto fx = programming_fixtures();
  const std::size_t per = 10000 / fx.size() + 1;
  std::size_t trials = 0, violations = 0;
  double worst = INFINITY;
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const auto r = verify_prop1(fx[i].device, fx[i].xi1, fx[i].xi2, per, 100 + i);
    trials += r.trials;
    violations += r.violations;
    worst = std::min(worst, r.worst_margin);
  }
  const double elapsed = seconds_since(t0);
  o.require(trials >= 10000, "only " + std::to_string(trials) + " trials");
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.require(worst >= -1e-9, "worst margin " + fmt("%.3g", worst));
  o.require(elapsed < 60.0, "runtime " + fmt("%.3g", elapsed) + " s");
  if (o.pass)
    o.detail = std::to_string(trials) + " trials, worst margin " + fmt("%.3e", worst) + ", " +
               fmt("%.2f", elapsed) + " s";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto fx = programming_fixtures();
  Rng rng(5);
  const std::size_t per = 10000 / fx.size() + 1;
  std::size_t trials = 0, violations = 0;
  double worst = INFINITY;
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const std::size_t n = fx[i].device.pointer().size();
    const auto l1 = random_kernel(n, 1 + (i + 2) % 4, rng);
    const auto l2 = random_kernel(n, l1.n_out(), rng);
    const auto r = verify_prop3(fx[i].device, fx[i].xi1, fx[i].xi2, l1, l2, per, 200 + i);
    trials += r.trials;
    violations += r.violations;
    worst = std::min(worst, r.worst_margin);
  }
  const auto q8 = quaternion_fixture();
  const double f = pp_fidelity(q8.l1, q8.l2);
  const auto sharp = verify_prop3(q8.device, q8.xi1, q8.xi2, q8.l1, q8.l2, 100, 300);
  o.require(trials >= 10000, "only " + std::to_string(trials) + " trials");
  o.require(violations == 0 && sharp.passed(), std::to_string(violations) + " violations");
  o.require(std::abs(f) <= 1e-12, "coset kernel fidelity " + fmt("%.3g", f));
  if (o.pass)
    o.detail = std::to_string(trials) + " trials, worst margin " + fmt("%.3e", worst) +
               ", q8 coset kernel fidelity " + fmt("%.1e", f);
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(6);
  double worst_gap = 0.0, worst_excess = -INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    const auto l1 = random_kernel(3, 2, rng);
    const auto l2 = random_kernel(3, 2, rng);
    const double closed = pp_fidelity(l1, l2);
    const auto values = oracle::kernel_grid_values(l1, l2, 20);
    const double grid_min = *std::min_element(values.begin(), values.end());
    worst_excess = std::max(worst_excess, closed - grid_min);
    worst_gap = std::max(worst_gap, grid_min - closed);
  }
  o.require(worst_excess <= 1e-12, "closed form exceeds grid by " + fmt("%.3g", worst_excess));
  o.require(worst_gap <= 1e-3, "grid gap " + fmt("%.3g", worst_gap));
  if (o.pass) o.detail = "max grid gap " + fmt("%.2e", worst_gap) + " over 100 kernel pairs";
  return o;
}

Observable smeared(double eta, const Eigen::Vector3d& a) {
  const ComplexMatrix s =
      a.x() * oracle::pauli('x') + a.y() * oracle::pauli('y') + a.z() * oracle::pauli('z');
  return Observable({"+", "-"}, {0.5 * (identity(2) + eta * s), 0.5 * (identity(2) - eta * s)});
}

Eigen::Vector3d random_direction(Rng& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector3d v(n(rng), n(rng), n(rng));
  return v.normalized();
}

Outcome criterion7() {
  Outcome o;
  Rng rng(7);
  double min_self = 1.0;
  for (int i = 0; i < 20; ++i) {
    const Observable e = random_povm(2 + i % 2, 2 + i % 3, rng);
    DivergenceOptions opts;
    opts.seed = static_cast<std::uint64_t>(i);
    min_self = std::min(min_self, observable_divergence(e, e, opts).value);
  }
  o.require(min_self >= 1.0 - 2e-3, "self divergence " + fmt("%.6f", min_self));

  double max_sharp = 0.0;
  int sharp_pairs = 0;
  while (sharp_pairs < 10) {
    const Observable e1 = random_pvm(2, rng);
    const Observable e2 = random_pvm(2, rng);
    if (max_effect_diff(e1, e2) < 1e-3) continue;
    DivergenceOptions opts;
    opts.seed = static_cast<std::uint64_t>(sharp_pairs);
    const auto est = observable_divergence(e1, e2, opts);
    o.require(est.exact_zero, "sharp pair " + std::to_string(sharp_pairs) + " without exact zero");
    max_sharp = std::max(max_sharp, est.value);
    ++sharp_pairs;
  }
  o.require(max_sharp < 1e-4, "sharp divergence " + fmt("%.3g", max_sharp));

  const double eta = 0.5;
  const double grid = oracle::smeared_qubit_grid(eta, 1000);
  double max_diff = 0.0;
  for (int i = 0; i < 5; ++i) {
    const Eigen::Vector3d a1 = random_direction(rng);
    const Eigen::Vector3d r = random_direction(rng);
    const Eigen::Vector3d a2 = (r - a1 * a1.dot(r)).normalized();
    DivergenceOptions opts;
    opts.seed = static_cast<std::uint64_t>(i);
    const auto est = observable_divergence(smeared(eta, a1), smeared(eta, a2), opts);
    max_diff = std::max(max_diff, std::abs(est.value - grid));
  }
  o.require(max_diff <= 1e-3, "smeared mismatch " + fmt("%.3g", max_diff));
  if (o.pass)
    o.detail = "min self " + fmt("%.6f", min_self) + ", max sharp " + fmt("%.1e", max_sharp) +
               ", smeared mismatch " + fmt("%.1e", max_diff);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto c = sharpmin_curve(201);
  const double elapsed = seconds_since(t0);
  const double center = c.bound[100];
  double asym = 0.0, drop = 0.0;
  for (std::size_t i = 0; i < 201; ++i) asym = std::max(asym, std::abs(c.bound[i] - c.bound[200 - i]));
  for (std::size_t i = 101; i < 201; ++i) {
    drop = std::max(drop, c.bound[i - 1] - c.bound[i]);
    drop = std::max(drop, c.bound[200 - i + 1] - c.bound[200 - i]);
  }
  const double ends = std::max(std::abs(c.bound.front() - 1.0), std::abs(c.bound.back() - 1.0));
  o.require(std::abs(center - 1.0 / std::sqrt(2.0)) <= 1e-6, "bound(0) = " + fmt("%.9f", center));
  o.require(asym <= 1e-6, "asymmetry " + fmt("%.3g", asym));
  o.require(drop <= 0.0, "non-monotone by " + fmt("%.3g", drop));
  o.require(ends <= 1e-6, "endpoint error " + fmt("%.3g", ends));
  o.require(elapsed < 30.0, "runtime " + fmt("%.3g", elapsed) + " s");
  if (o.pass)
    o.detail = "bound(0) = " + fmt("%.9f", center) + ", asymmetry " + fmt("%.1e", asym) + ", " +
               fmt("%.2f", elapsed) + " s";
  return o;
}

Outcome criterion9() {
  Outcome o;
  Rng rng(9);
  const Observable e1 = random_povm(2, 3, rng);
  const Observable e2 = random_povm(2, 3, rng);
  const auto r = verify_b_properties(e1, e2, 200, 9);
  for (const auto& c : r.checks) {
    if (!c.applicable) continue;
    o.require(c.passed(), c.name + " worst margin " + fmt("%.3g", c.worst_margin));
    const bool per_transformation = c.name.rfind("B1", 0) == 0 || c.name.rfind("B4", 0) == 0 ||
                                    c.name.rfind("B5", 0) == 0 || c.name.rfind("B6", 0) == 0;
    if (per_transformation) o.require(c.trials >= 200, c.name + " only " + std::to_string(c.trials) + " trials");
  }
  const auto fb = verify_fidelity_bound(3, 4, 1000, 10);
  o.require(fb.passed() && fb.trials == 1000, "fidelity bound worst margin " + fmt("%.3g", fb.worst_margin));
  if (o.pass)
    o.detail = std::to_string(r.checks.size()) + " property checks, fidelity bound worst margin " +
               fmt("%.3e", fb.worst_margin);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"quaternion pipeline", criterion1},   {"phase-space pipeline", criterion2},
      {"multimeter identity", criterion3},   {"programming bound", criterion4},
      {"post-processed bound", criterion5},  {"kernel fidelity closed form", criterion6},
      {"observable divergence", criterion7}, {"sharp-observable bound curve", criterion8},
      {"property suites", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
