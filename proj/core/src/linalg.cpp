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

#include "qmm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "qmm/errors.hpp"

namespace qmm {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

// Offsets into the full index for every composite index over `subsystems`.
std::vector<Eigen::Index> offsets_for(std::span<const std::size_t> subsystems,
                                      std::span<const std::size_t> dims,
                                      std::span<const Eigen::Index> strides) {
  std::vector<Eigen::Index> out{0};
  for (std::size_t s : subsystems) {
    std::vector<Eigen::Index> next;
    next.reserve(out.size() * dims[s]);
    for (Eigen::Index base : out) {
      for (std::size_t digit = 0; digit < dims[s]; ++digit) {
        next.push_back(base + static_cast<Eigen::Index>(digit) * strides[s]);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

ComplexMatrix identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ComplexMatrix::Identity(n, n);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) return identity(1);
  ComplexMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  require_square(m, "partial_trace");
  if (dims.empty()) throw DimensionError("partial_trace: empty subsystem list");
  const auto total = std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                     std::multiplies<std::size_t>());
  if (static_cast<Eigen::Index>(total) != m.rows()) {
    throw DimensionError("partial_trace: subsystem dimensions multiply to " +
                         std::to_string(total) + " but matrix has size " +
                         std::to_string(m.rows()));
  }

  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (!kept.empty() && kept.back() >= dims.size()) {
    throw DimensionError("partial_trace: kept subsystem index out of range");
  }
  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
  }

  std::vector<Eigen::Index> strides(dims.size());
  Eigen::Index stride = 1;
  for (std::size_t s = dims.size(); s-- > 0;) {
    strides[s] = stride;
    stride *= static_cast<Eigen::Index>(dims[s]);
  }

  const auto kept_offsets = offsets_for(kept, dims, strides);
  const auto traced_offsets = offsets_for(traced, dims, strides);
  const auto n = static_cast<Eigen::Index>(kept_offsets.size());

  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index t : traced_offsets) {
        acc += m(kept_offsets[a] + t, kept_offsets[b] + t);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(m, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

Complex trace(const ComplexMatrix& m) {
  require_square(m, "trace");
  return m.trace();
}

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  ComplexMatrix prod = m.adjoint() * m;
  return max_abs_diff(prod, identity(static_cast<std::size_t>(m.rows()))) <= tol;
}

HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol_herm) {
  require_square(m, "hermitian_eig");
  if (!is_hermitian(m, tol_herm)) {
    throw DomainError("hermitian_eig: input is not Hermitian within tolerance");
  }
  // Symmetrize so the solver only sees rounding-level asymmetry removed.
  Eigen::MatrixXcd h = hermitian_part(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw DomainError("hermitian_eig: eigensolver failed to converge");
  }
  const Eigen::Index n = h.rows();
  HermitianEigen out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m, double tol_herm) {
  const auto eig = hermitian_eig(m, tol_herm);
  return eig.values.size() == 0 ? 0.0 : eig.values(eig.values.size() - 1);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol_psd, double tol_herm) {
  auto eig = hermitian_eig(m, tol_herm);
  const Eigen::Index n = eig.values.size();
  // Eigenvalues at the rounding floor are zero; their square roots would not be.
  const double scale = n > 0 ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  const double floor = 16.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
  RealVector roots(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double v = eig.values(k);
    if (v < -tol_psd) {
      throw DomainError("psd_sqrt: eigenvalue " + std::to_string(v) + " below -tol_psd");
    }
    roots(k) = v > floor ? std::sqrt(v) : 0.0;
  }
  ComplexMatrix out = eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return hermitian_part(out);
}

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  return h;
}

}  // namespace qmm
