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
#include "qmm/demos.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "qmm/bound.hpp"
#include "qmm/covariant.hpp"
#include "qmm/errors.hpp"
#include "qmm/group.hpp"
#include "qmm/postprocessing.hpp"

namespace qmm {
namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

ProgrammedPvm run_pipeline(const ProjectiveRepresentation& rep, const Multimeter& mm,
                           const CyclicSubgroup& h, const ComplexVector& psi,
                           const DensityState& eta) {
  const DensityState seed = DensityState::pure(psi);
  const Observable programmed = program(mm, covariant_program_state(eta, seed));
  const PostProcessing kernel = coset_postprocessing(rep.group(), h);

  ProgrammedPvm out{rep.group().name(h.generator), psi,
                    post_process_observable(kernel, programmed), 0.0, 0.0, 0.0};
  out.pvm_defect = pvm_defect(out.pvm);
  for (const auto& e : out.pvm.effects()) {
    out.rank_defect = std::max(out.rank_defect, std::abs(trace(e).real() - 1.0));
  }
  out.sharp_mismatch = max_effect_diff(out.pvm, sharp_from_subgroup(rep, h, psi));
  return out;
}

ComplexMatrix pauli(char axis) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  const Complex i{0.0, 1.0};
  switch (axis) {
    case 'x': s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 'y': s(0, 1) = -i; s(1, 0) = i; break;
    default: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
  }
  return s;
}

double pair_error(const Observable& e, const ComplexMatrix& plus, const ComplexMatrix& minus) {
  if (e.size() != 2) return std::numeric_limits<double>::infinity();
  const double direct = std::max(max_abs_diff(e.effect(0), plus), max_abs_diff(e.effect(1), minus));
  const double crossed = std::max(max_abs_diff(e.effect(0), minus), max_abs_diff(e.effect(1), plus));
  return std::min(direct, crossed);
}

}  // namespace

QuaternionDemoReport quaternion_demo() {
  const auto start = Clock::now();
  const ProjectiveRepresentation rep = q8_representation();
  const FiniteGroup& g = rep.group();
  const Multimeter mm = covariant_multimeter(rep);
  const DensityState eta = DensityState::basis(2, 0);

  QuaternionDemoReport report;
  const auto subgroups = cyclic_subgroups(g, g.order() / rep.degree());
  if (subgroups.size() != 3) {
    throw CheckFailure("quaternion_demo: expected 3 cyclic subgroups of order 4, found " +
                       std::to_string(subgroups.size()));
  }
  const char axes[3] = {'x', 'y', 'z'};
  const ComplexMatrix id = identity(2);
  for (std::size_t s = 0; s < subgroups.size(); ++s) {
    const auto programs = eigenvector_program_states(rep, subgroups[s].generator);
    report.outputs.push_back(run_pipeline(rep, mm, subgroups[s], programs.vectors.front(), eta));
    const ComplexMatrix sigma = pauli(axes[s]);
    const double err = std::max(pair_error(report.outputs.back().pvm, (id + sigma) / 2.0,
                                           (id - sigma) / 2.0),
                                report.outputs.back().sharp_mismatch);
    report.max_pvm_error = std::max(report.max_pvm_error, err);
  }

  const std::size_t n = report.outputs.size();
  report.fidelities = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double target = 1.0 / std::sqrt(2.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const double f = fidelity(DensityState::pure(report.outputs[a].program_vector),
                                DensityState::pure(report.outputs[b].program_vector));
      report.fidelities(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = f;
      if (a != b) report.max_fidelity_error = std::max(report.max_fidelity_error, std::abs(f - target));
    }
  }
  report.bound_at_zero = sharpmin_bound(0.0);
  report.coset_kernel_fidelity =
      pp_fidelity(coset_postprocessing(g, subgroups[0]), coset_postprocessing(g, subgroups[2]));
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();

  if (report.max_pvm_error > 1e-9) {
    throw CheckFailure("quaternion_demo: programmed outputs differ from the Pauli PVMs by " +
                       fmt(report.max_pvm_error));
  }
  if (report.max_fidelity_error > 1e-10) {
    throw CheckFailure("quaternion_demo: F(P_psi_i, P_psi_j) differs from 1/sqrt(2) by " +
                       fmt(report.max_fidelity_error));
  }
  if (std::abs(report.bound_at_zero - target) > 1e-6) {
    throw CheckFailure("quaternion_demo: sharpmin bound at 0 is " + fmt(report.bound_at_zero) +
                       ", not 1/sqrt(2)");
  }
  return report;
}

PhaseSpaceDemoReport phase_space_demo(std::size_t d) {
  if (!is_prime(d) || d > 13) {
    throw DomainError("phase_space_demo: d must be a prime no larger than 13, got " +
                      std::to_string(d));
  }
  const auto start = Clock::now();
  const ProjectiveRepresentation rep = weyl_heisenberg(d);
  const Multimeter mm = covariant_multimeter(rep);
  const DensityState eta = DensityState::basis(d, 0);

  PhaseSpaceDemoReport report;
  report.d = d;
  for (const auto& p : phase_space_programs(rep)) {
    if (!p.formula_verified) report.formula_failures.push_back(rep.group().name(p.generator));
    report.outputs.push_back(run_pipeline(rep, mm, p.subgroup, p.vector, eta));
    const auto& out = report.outputs.back();
    report.max_pvm_defect = std::max({report.max_pvm_defect, out.pvm_defect, out.sharp_mismatch});
    report.max_rank_defect = std::max(report.max_rank_defect, out.rank_defect);
  }

  const auto n = static_cast<Eigen::Index>(report.outputs.size());
  report.overlaps = Eigen::MatrixXd::Zero(n, n);
  const double target = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const double o = std::abs(report.outputs[a].program_vector.dot(report.outputs[b].program_vector));
      report.overlaps(a, b) = o;
      if (a != b) report.max_overlap_error = std::max(report.max_overlap_error, std::abs(o - target));
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();

  if (report.max_overlap_error > 1e-8) {
    throw CheckFailure("phase_space_demo: overlap differs from 1/sqrt(d) by " +
                       fmt(report.max_overlap_error));
  }
  if (report.max_pvm_defect > 1e-8 || report.max_rank_defect > 1e-8) {
    throw CheckFailure("phase_space_demo: coset output is not a rank-1 PVM (defect " +
                       fmt(std::max(report.max_pvm_defect, report.max_rank_defect)) + ")");
  }
  return report;
}

}  // namespace qmm
