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
#include <string>
#include <vector>

#include "qmm/linalg.hpp"
#include "qmm/quantum.hpp"

namespace qmm {

/// One programmed sharp observable of a covariant pipeline.
struct ProgrammedPvm {
  std::string subgroup;          // generator name
  ComplexVector program_vector;  // psi, with xi = eta (x) P_psi^T as probe state
  Observable pvm;                // coset post-processing of the programmed observable
  double pvm_defect = 0.0;       // idempotency / orthogonality
  double rank_defect = 0.0;      // max |tr E(x) - 1|
  double sharp_mismatch = 0.0;   // vs. the direct coset construction
};

struct QuaternionDemoReport {
  std::vector<ProgrammedPvm> outputs;  // subgroups <i>, <j>, <k>
  /// Largest entrywise distance of each output to {(1 +- sigma)/2}, matched
  /// as an unordered pair, sigma = sigma_x, sigma_y, sigma_z.
  double max_pvm_error = 0.0;
  Eigen::MatrixXd fidelities;          // F(P_psi_i, P_psi_j)
  double max_fidelity_error = 0.0;     // off-diagonal distance to 1/sqrt(2)
  double bound_at_zero = 0.0;          // sharpmin bound at t = 0
  double coset_kernel_fidelity = 0.0;  // pp_fidelity of the <i> and <k> kernels
  double elapsed_seconds = 0.0;
};

/// Programs the quaternion covariant multimeter with the eigenvectors of
/// U(i), U(j), U(k) and merges outcomes by cosets. Throws CheckFailure
/// when the outputs are not the Pauli PVMs within 1e-9, an off-diagonal
/// fidelity misses 1/sqrt(2) by more than 1e-10, or the sharpmin bound at 0
/// misses 1/sqrt(2) by more than 1e-6.
QuaternionDemoReport quaternion_demo();

struct PhaseSpaceDemoReport {
  std::size_t d = 0;
  std::vector<ProgrammedPvm> outputs;  // (0,1) first, then (1,0), ..., (1,d-1)
  Eigen::MatrixXd overlaps;            // |<psi_j|psi_k>|
  double max_overlap_error = 0.0;      // off-diagonal distance to 1/sqrt(d)
  double max_pvm_defect = 0.0;
  double max_rank_defect = 0.0;
  /// Generators whose closed-form vector is not an eigenvector of U(g).
  std::vector<std::string> formula_failures;
  double elapsed_seconds = 0.0;
};

/// Weyl-Heisenberg pipeline for prime d <= 13. Throws DomainError for other
/// d and CheckFailure when an overlap misses 1/sqrt(d) or an output is not a
/// rank-1 PVM, both within 1e-8. Closed-form mismatches (d = 2) are recorded,
/// not fatal.
PhaseSpaceDemoReport phase_space_demo(std::size_t d);

}  // namespace qmm
