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
#include <cstdint>
#include <random>

#include "qmm/linalg.hpp"
#include "qmm/postprocessing.hpp"
#include "qmm/quantum.hpp"

namespace qmm {

/// Seedable generator used by every randomized routine.
using Rng = std::mt19937_64;

/// Haar-distributed unit vector (normalized complex Gaussian).
ComplexVector random_unit_vector(std::size_t dim, Rng& rng);
/// Haar unitary via QR of a Ginibre matrix with the phase correction.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
/// Hermitian with i.i.d. complex Gaussian entries (GUE-like).
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

DensityState random_pure_state(std::size_t dim, Rng& rng);
/// Y Y^dagger / tr with Y a dim x rank Ginibre matrix.
DensityState random_mixed_state(std::size_t dim, std::size_t rank, Rng& rng);

/// Eigenbasis PVM of a random Hermitian.
Observable random_pvm(std::size_t dim, Rng& rng);
/// Y_i^dagger Y_i normalized by S^{-1/2} on both sides, S = sum Y_i^dagger Y_i.
Observable random_povm(std::size_t dim, std::size_t outcomes, Rng& rng);

/// Kraus operators from the blocks of a Haar isometry.
QuantumChannel random_channel(std::size_t dim, std::size_t kraus_count, Rng& rng);

/// Multimeter with a Haar-unitary interaction and a random pointer PVM.
Multimeter random_multimeter(std::size_t system_dim, std::size_t probe_dim, Rng& rng);

Distribution random_distribution(std::size_t n, Rng& rng);
/// Rows drawn uniformly from the simplex.
PostProcessing random_kernel(std::size_t n_in, std::size_t n_out, Rng& rng);

}  // namespace qmm
