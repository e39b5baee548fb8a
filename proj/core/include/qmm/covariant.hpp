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
#include <vector>

#include "qmm/group.hpp"
#include "qmm/postprocessing.hpp"
#include "qmm/quantum.hpp"

namespace qmm {

/// E(g) = (d / |G|) U(g) seed U(g)^dagger, outcomes labelled by element
/// names. Throws NormalizationError when the effects do not sum to the
/// identity, which happens for reducible representations.
Observable covariant_observable(const ProjectiveRepresentation& rep, const DensityState& seed);

/// Deterministic kernel sending g to its left coset gH. Outputs are labelled
/// "<representative>H".
PostProcessing coset_postprocessing(const FiniteGroup& g, const CyclicSubgroup& h);

struct EigenPrograms {
  std::vector<ComplexVector> vectors;  // orthonormal, ordered by eigenvalue phase in [0, 2pi)
  std::vector<Complex> eigenvalues;
  bool degenerate = false;              // two eigenvalues closer than 1e-8
};

/// Eigenvectors of U(generator). Each is normalized so that its first
/// largest-modulus component is real and positive. Throws DomainError unless
/// the generator has order |G| / d.
EigenPrograms eigenvector_program_states(const ProjectiveRepresentation& rep,
                                         std::size_t generator);

/// U(g) P U(g)^dagger == P for every g in h, within tol.
bool is_invariant_under(const ProjectiveRepresentation& rep, const CyclicSubgroup& h,
                        const ComplexVector& psi, double tol = 1e-9);

/// d-outcome PVM {U(r) P_psi U(r)^dagger} over the coset representatives r of
/// h, labelled like coset_postprocessing. Throws DomainError when psi is not
/// invariant under h.
Observable sharp_from_subgroup(const ProjectiveRepresentation& rep, const CyclicSubgroup& h,
                               const ComplexVector& psi);

/// Multimeter on probe H (x) H with pointer Z(g) = (d^2/|G|)|u(g)><u(g)|,
/// u(g) = (U(g) (x) 1) sum_l phi_l (x) phi_l / sqrt(d), and the partial swap
/// A (x) B (x) C -> B (x) A (x) C as interaction.
Multimeter covariant_multimeter(const ProjectiveRepresentation& rep);

/// Probe state eta (x) xi^T (transpose in the computational basis), which
/// programs covariant_multimeter to covariant_observable(rep, xi).
DensityState covariant_program_state(const DensityState& eta, const DensityState& xi);

/// Closed-form eigenvector candidate of U(1,k) on Z_d x Z_d:
/// coefficients omega^{jk(j-1)/2 - j} / sqrt(d).
ComplexVector phase_space_formula_vector(std::size_t d, std::size_t k);

struct PhaseSpaceProgram {
  std::size_t generator;          // (0,1) first, then (1,0), (1,1), ...
  CyclicSubgroup subgroup;
  ComplexVector formula_vector;   // phi_0 for (0,1), closed form otherwise
  ComplexVector vector;           // from diagonalization, authoritative
  Complex eigenvalue;
  bool formula_verified;          // formula_vector is an eigenvector of U(generator)
};

/// The d+1 programming vectors of the Weyl-Heisenberg representation. Each
/// vector is taken from the diagonalization of U(generator): the eigenvector
/// parallel to the closed form when the closed form is an eigenvector,
/// otherwise the first eigenvector in phase order.
std::vector<PhaseSpaceProgram> phase_space_programs(const ProjectiveRepresentation& wh);

}  // namespace qmm
