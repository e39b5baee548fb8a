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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qmm {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Subsystems of tensor products are ordered
/// big-endian: the first factor carries the most significant index.
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVector = Eigen::VectorXd;

struct Tolerances {
  double herm = 1e-10;
  double orth = 1e-10;
  double psd = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

struct HermitianEigen {
  RealVector values;     // descending
  ComplexMatrix vectors; // orthonormal columns, matching `values`
};

ComplexMatrix identity(std::size_t dim);

/// Kronecker product; entry (i*rb + k, j*cb + l) equals a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);

/// Reduced matrix on the subsystems listed in `keep` (any order, returned in
/// ascending subsystem order). Throws DimensionError when the product of
/// `dims` differs from the matrix size or `keep` is out of range.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

ComplexMatrix partial_trace(const ComplexMatrix& m, std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep);

Complex trace(const ComplexMatrix& m);
ComplexMatrix dagger(const ComplexMatrix& m);

/// Largest absolute entry of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTolerances.herm);
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTolerances.orth);

/// Eigendecomposition of a Hermitian matrix, eigenvalues in descending order.
/// Throws DomainError for non-square or non-Hermitian input.
HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol_herm = kDefaultTolerances.herm);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m, double tol_herm = kDefaultTolerances.herm);

/// Unique PSD square root. Eigenvalues in [-tol_psd, 0) are clipped to zero;
/// anything more negative raises DomainError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol_psd = kDefaultTolerances.psd,
                       double tol_herm = kDefaultTolerances.herm);

/// Orthogonal projector |v><v| (v is not normalized).
ComplexMatrix outer(const ComplexVector& v);

/// Hermitian part (m + m^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

}  // namespace qmm
