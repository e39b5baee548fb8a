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

#include "qmm/random.hpp"

#include <cmath>

#include <Eigen/QR>

#include "qmm/errors.hpp"

namespace qmm {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

Eigen::MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Eigen::MatrixXcd g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = gaussian(rng);
  }
  return g;
}

}  // namespace

ComplexVector random_unit_vector(std::size_t dim, Rng& rng) {
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gaussian(rng);
  return v / v.norm();
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(n, n, rng));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  const Eigen::MatrixXcd g = ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

DensityState random_pure_state(std::size_t dim, Rng& rng) {
  return DensityState::pure(random_unit_vector(dim, rng));
}

DensityState random_mixed_state(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank == 0) throw DomainError("random_mixed_state: rank must be positive");
  const Eigen::MatrixXcd y = ginibre(static_cast<Eigen::Index>(dim),
                                     static_cast<Eigen::Index>(rank), rng);
  ComplexMatrix rho = y * y.adjoint();
  rho /= rho.trace().real();
  return DensityState::from_matrix(hermitian_part(rho));
}

Observable random_pvm(std::size_t dim, Rng& rng) {
  return Observable::from_basis(hermitian_eig(random_hermitian(dim, rng)).vectors);
}

Observable random_povm(std::size_t dim, std::size_t outcomes, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  std::vector<ComplexMatrix> raw;
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < outcomes; ++i) {
    const Eigen::MatrixXcd y = ginibre(n, n, rng);
    raw.push_back(y.adjoint() * y);
    s += raw.back();
  }
  const auto eig = hermitian_eig(hermitian_part(s));
  const RealVector inv_sqrt = eig.values.cwiseSqrt().cwiseInverse();
  const ComplexMatrix s_inv_half =
      eig.vectors * inv_sqrt.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  std::vector<ComplexMatrix> effects;
  effects.reserve(outcomes);
  for (const auto& e : raw) effects.push_back(hermitian_part(s_inv_half * e * s_inv_half));
  return Observable::with_index_labels(std::move(effects));
}

QuantumChannel random_channel(std::size_t dim, std::size_t kraus_count, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  const auto r = static_cast<Eigen::Index>(kraus_count);
  const ComplexMatrix u = random_unitary(dim * kraus_count, rng);
  std::vector<ComplexMatrix> kraus(kraus_count, ComplexMatrix(d, d));
  for (Eigen::Index k = 0; k < r; ++k) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        kraus[static_cast<std::size_t>(k)](i, j) = u(i * r + k, j);
      }
    }
  }
  return QuantumChannel(std::move(kraus));
}

Multimeter random_multimeter(std::size_t system_dim, std::size_t probe_dim, Rng& rng) {
  Observable pointer = random_pvm(probe_dim, rng);
  QuantumChannel interaction = QuantumChannel::unitary(random_unitary(system_dim * probe_dim, rng));
  return Multimeter(system_dim, std::move(pointer), std::move(interaction));
}

Distribution random_distribution(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> ex(1.0);
  Distribution p(n);
  double sum = 0.0;
  for (double& v : p) {
    v = ex(rng);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

PostProcessing random_kernel(std::size_t n_in, std::size_t n_out, Rng& rng) {
  Eigen::MatrixXd k(static_cast<Eigen::Index>(n_in), static_cast<Eigen::Index>(n_out));
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    const auto row = random_distribution(n_out, rng);
    for (Eigen::Index j = 0; j < k.cols(); ++j) k(i, j) = row[static_cast<std::size_t>(j)];
  }
  return PostProcessing(std::move(k));
}

}  // namespace qmm
