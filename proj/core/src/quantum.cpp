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

#include "qmm/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>
#include <Eigen/SparseCore>

#include "qmm/errors.hpp"

namespace qmm {

namespace {

constexpr double kStateHermTolerance = 1e-9;
constexpr double kProbabilityClip = 1e-12;

// K^dagger K, through a sparse product when K is mostly zeros (permutations).
ComplexMatrix gram(const ComplexMatrix& k) {
  const auto nonzeros = (k.array() != Complex(0.0)).count();
  if (nonzeros * 20 < k.size()) {
    const Eigen::SparseMatrix<Complex> s = k.sparseView();
    return ComplexMatrix(s.adjoint() * s);
  }
  return k.adjoint() * k;
}

std::string dims_str(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

// --- DensityState ---------------------------------------------------------

DensityState DensityState::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("DensityState: matrix must be square and non-empty");
  }
  if (!is_hermitian(m, kStateHermTolerance)) {
    throw DomainError("DensityState: matrix is not Hermitian");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTolerance) {
    throw DomainError("DensityState: trace " + std::to_string(tr.real()) + " differs from 1");
  }
  auto eig = hermitian_eig(m, kStateHermTolerance);
  double negative_mass = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) < 0.0) negative_mass -= eig.values(k);
  }
  if (negative_mass == 0.0) return DensityState(hermitian_part(m));
  if (negative_mass >= kReprojectThreshold) {
    throw DomainError("DensityState: negative eigenvalue mass " + std::to_string(negative_mass) +
                      " exceeds the re-projection threshold");
  }
  RealVector clipped = eig.values.cwiseMax(0.0);
  clipped /= clipped.sum();
  ComplexMatrix p = eig.vectors * clipped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return DensityState(hermitian_part(p));
}

DensityState DensityState::pure(const ComplexVector& v) {
  const double norm = v.norm();
  if (v.size() == 0 || norm == 0.0) throw DomainError("DensityState::pure: zero vector");
  const ComplexVector u = v / norm;
  return DensityState(hermitian_part(outer(u)));
}

DensityState DensityState::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw DimensionError("DensityState: zero dimension");
  return DensityState(identity(dim) / static_cast<double>(dim));
}

DensityState DensityState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("DensityState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return pure(v);
}

double DensityState::purity() const { return (matrix_ * matrix_).trace().real(); }

// --- Observable -----------------------------------------------------------

Observable::Observable(std::vector<std::string> labels, std::vector<ComplexMatrix> effects,
                       double tol_norm, double tol_psd)
    : labels_(std::move(labels)), effects_(std::move(effects)) {
  if (effects_.empty()) throw DimensionError("Observable: no effects");
  if (labels_.size() != effects_.size()) {
    throw DimensionError("Observable: label count " + dims_str(labels_.size(), effects_.size()) +
                         " effects");
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw DomainError("Observable: duplicate outcome labels");
  }
  dim_ = static_cast<std::size_t>(effects_.front().rows());
  ComplexMatrix sum = ComplexMatrix::Zero(effects_.front().rows(), effects_.front().cols());
  for (std::size_t i = 0; i < effects_.size(); ++i) {
    auto& e = effects_[i];
    if (e.rows() != e.cols() || static_cast<std::size_t>(e.rows()) != dim_) {
      throw DimensionError("Observable: effect '" + labels_[i] + "' has wrong shape");
    }
    if (!is_hermitian(e, std::max(tol_norm, kStateHermTolerance))) {
      throw DomainError("Observable: effect '" + labels_[i] + "' is not Hermitian");
    }
    e = hermitian_part(e);
    if (min_eigenvalue(e) < -tol_psd) {
      throw DomainError("Observable: effect '" + labels_[i] + "' is not positive");
    }
    sum += e;
  }
  const double defect = max_abs_diff(sum, identity(dim_));
  if (defect > tol_norm) {
    throw NormalizationError("Observable: effects sum to identity only within " +
                             std::to_string(defect));
  }
}

Observable Observable::with_index_labels(std::vector<ComplexMatrix> effects, double tol_norm) {
  std::vector<std::string> labels;
  labels.reserve(effects.size());
  for (std::size_t i = 0; i < effects.size(); ++i) labels.push_back(std::to_string(i));
  return Observable(std::move(labels), std::move(effects), tol_norm);
}

Observable Observable::from_basis(const ComplexMatrix& unitary) {
  if (!is_unitary(unitary, 1e-9)) throw DomainError("Observable::from_basis: not unitary");
  std::vector<ComplexMatrix> effects;
  for (Eigen::Index c = 0; c < unitary.cols(); ++c) {
    effects.push_back(outer(unitary.col(c)));
  }
  return with_index_labels(std::move(effects));
}

Observable Observable::trivial(std::size_t dim, std::size_t outcomes) {
  if (outcomes == 0) throw DimensionError("Observable::trivial: zero outcomes");
  std::vector<ComplexMatrix> effects(outcomes, identity(dim) / static_cast<double>(outcomes));
  return with_index_labels(std::move(effects));
}

const ComplexMatrix& Observable::effect(std::string_view label) const {
  const auto idx = index_of(label);
  if (!idx) throw DomainError("Observable: unknown outcome label '" + std::string(label) + "'");
  return effects_[*idx];
}

std::optional<std::size_t> Observable::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Observable::is_sharp(double tol) const {
  return std::all_of(effects_.begin(), effects_.end(), [tol](const ComplexMatrix& e) {
    return max_abs_diff(e * e, e) <= tol;
  });
}

double max_effect_diff(const Observable& a, const Observable& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) {
    throw DimensionError("max_effect_diff: observables have different shapes");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, max_abs_diff(a.effect(i), b.effect(i)));
  }
  return worst;
}

double pvm_defect(const Observable& e) {
  double worst = 0.0;
  for (std::size_t x = 0; x < e.size(); ++x) {
    for (std::size_t y = x; y < e.size(); ++y) {
      const ComplexMatrix prod = e.effect(x) * e.effect(y);
      const double d = x == y ? max_abs_diff(prod, e.effect(x)) : prod.cwiseAbs().maxCoeff();
      worst = std::max(worst, d);
    }
  }
  return worst;
}

// --- QuantumChannel -------------------------------------------------------

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus, double tol)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw DimensionError("QuantumChannel: no Kraus operators");
  out_dim_ = static_cast<std::size_t>(kraus_.front().rows());
  in_dim_ = static_cast<std::size_t>(kraus_.front().cols());
  ComplexMatrix sum = ComplexMatrix::Zero(kraus_.front().cols(), kraus_.front().cols());
  for (const auto& k : kraus_) {
    if (static_cast<std::size_t>(k.rows()) != out_dim_ ||
        static_cast<std::size_t>(k.cols()) != in_dim_) {
      throw DimensionError("QuantumChannel: Kraus operators have inconsistent shapes");
    }
    sum += gram(k);
  }
  const double defect = max_abs_diff(sum, qmm::identity(in_dim_));
  if (defect > tol) {
    throw NormalizationError("QuantumChannel: sum K^dagger K deviates from identity by " +
                             std::to_string(defect));
  }
}

QuantumChannel QuantumChannel::identity(std::size_t dim) {
  return QuantumChannel(std::vector<ComplexMatrix>{qmm::identity(dim)});
}

QuantumChannel QuantumChannel::unitary(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw DomainError("QuantumChannel::unitary: matrix is not square");
  try {
    return QuantumChannel(std::vector<ComplexMatrix>{u});
  } catch (const NormalizationError&) {
    throw DomainError("QuantumChannel::unitary: matrix is not unitary");
  }
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& t) const {
  if (static_cast<std::size_t>(t.rows()) != in_dim_ || t.rows() != t.cols()) {
    throw DimensionError("QuantumChannel::apply: operator dimension " +
                         dims_str(static_cast<std::size_t>(t.rows()), in_dim_));
  }
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(out_dim_),
                                          static_cast<Eigen::Index>(out_dim_));
  for (const auto& k : kraus_) out.noalias() += k * t * k.adjoint();
  return out;
}

ComplexMatrix QuantumChannel::apply_dual(const ComplexMatrix& b) const {
  if (static_cast<std::size_t>(b.rows()) != out_dim_ || b.rows() != b.cols()) {
    throw DimensionError("QuantumChannel::apply_dual: operator dimension " +
                         dims_str(static_cast<std::size_t>(b.rows()), out_dim_));
  }
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(in_dim_),
                                          static_cast<Eigen::Index>(in_dim_));
  for (const auto& k : kraus_) out.noalias() += k.adjoint() * b * k;
  return out;
}

DensityState apply_channel(const QuantumChannel& c, const DensityState& rho) {
  return DensityState::from_matrix(c.apply(rho.matrix()));
}

Observable dual_apply(const QuantumChannel& c, const Observable& e) {
  if (e.dim() != c.out_dim()) {
    throw DimensionError("dual_apply: observable dimension " + dims_str(e.dim(), c.out_dim()));
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(e.size());
  for (const auto& eff : e.effects()) effects.push_back(c.apply_dual(eff));
  return Observable(e.labels(), std::move(effects), 1e-8);
}

UnitaryDilation unitary_dilation(const QuantumChannel& c) {
  if (c.in_dim() != c.out_dim()) {
    throw DimensionError("unitary_dilation: requires in_dim == out_dim");
  }
  const auto d = static_cast<Eigen::Index>(c.in_dim());
  const auto r = static_cast<Eigen::Index>(c.kraus().size());
  const Eigen::Index n = d * r;

  // Isometry |j> -> sum_k K_k|j> (x) |k>, rows indexed (system, ancilla).
  Eigen::MatrixXcd iso = Eigen::MatrixXcd::Zero(n, d);
  for (Eigen::Index k = 0; k < r; ++k) {
    const auto& kk = c.kraus()[static_cast<std::size_t>(k)];
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) iso(i * r + k, j) = kk(i, j);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(iso);
  const Eigen::MatrixXcd q = qr.householderQ();

  ComplexMatrix u(n, n);
  Eigen::Index next_complement = d;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index a = 0; a < r; ++a) {
      const Eigen::Index col = j * r + a;
      if (a == 0) {
        u.col(col) = iso.col(j);
      } else {
        u.col(col) = q.col(next_complement++);
      }
    }
  }
  return UnitaryDilation{std::move(u), DensityState::basis(static_cast<std::size_t>(r), 0),
                         static_cast<std::size_t>(d), static_cast<std::size_t>(r)};
}

ComplexMatrix dilation_dual(const UnitaryDilation& d, const ComplexMatrix& b) {
  const std::size_t dims[] = {d.system_dim, d.ancilla_dim};
  const std::size_t keep[] = {0};
  const ComplexMatrix lifted = tensor(b, qmm::identity(d.ancilla_dim));
  const ComplexMatrix heis = d.unitary.adjoint() * lifted * d.unitary;
  const ComplexMatrix probe = tensor(qmm::identity(d.system_dim), d.ancilla.matrix());
  return partial_trace(heis * probe, dims, keep);
}

// --- Multimeter -----------------------------------------------------------

Multimeter::Multimeter(std::size_t system_dim, Observable pointer, QuantumChannel interaction)
    : system_dim_(system_dim), pointer_(std::move(pointer)), interaction_(std::move(interaction)) {
  const std::size_t joint = system_dim_ * pointer_.dim();
  if (system_dim_ == 0) throw DimensionError("Multimeter: zero system dimension");
  if (interaction_.in_dim() != joint || interaction_.out_dim() != joint) {
    throw DimensionError("Multimeter: interaction must act on system (x) probe of dimension " +
                         std::to_string(joint));
  }
}

MeasurementModel::MeasurementModel(Multimeter device, DensityState probe_state)
    : device_(std::move(device)), probe_state_(std::move(probe_state)) {
  if (probe_state_.dim() != device_.probe_dim()) {
    throw DimensionError("MeasurementModel: probe state dimension " +
                         dims_str(probe_state_.dim(), device_.probe_dim()));
  }
}

Observable induced_observable(const MeasurementModel& model) {
  const auto& dev = model.device();
  const auto d = static_cast<Eigen::Index>(dev.system_dim());
  const auto probe = static_cast<Eigen::Index>(dev.probe_dim());

  // xi = sum_s w_s |chi_s><chi_s|, so
  // E(x) = sum_{k,s} w_s W_ks^dagger (1 (x) Z(x)) W_ks with W_ks = K_k (1 (x) |chi_s>).
  const auto eig = hermitian_eig(model.probe_state().matrix(), kStateHermTolerance);
  const double cutoff = 1e-15;
  std::vector<std::pair<double, ComplexMatrix>> lifts;
  for (Eigen::Index s = 0; s < eig.values.size(); ++s) {
    const double w = eig.values(s);
    if (w <= cutoff) continue;
    const ComplexVector chi = eig.vectors.col(s);
    for (const auto& k : dev.interaction().kraus()) {
      ComplexMatrix lift(d * probe, d);
      for (Eigen::Index a = 0; a < d; ++a) {
        lift.col(a) = k.middleCols(a * probe, probe) * chi;
      }
      lifts.emplace_back(w, std::move(lift));
    }
  }

  const auto& pointer = dev.pointer();
  std::vector<ComplexMatrix> effects;
  effects.reserve(pointer.size());
  ComplexMatrix applied(d * probe, d);
  for (const auto& z : pointer.effects()) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    for (const auto& [w, lift] : lifts) {
      for (Eigen::Index i = 0; i < d; ++i) {
        applied.middleRows(i * probe, probe).noalias() = z * lift.middleRows(i * probe, probe);
      }
      e.noalias() += w * (lift.adjoint() * applied);
    }
    effects.push_back(std::move(e));
  }
  return Observable(pointer.labels(), std::move(effects), 1e-8);
}

Observable program(const Multimeter& m, const DensityState& xi) {
  return induced_observable(MeasurementModel(m, xi));
}

// --- Statistics -----------------------------------------------------------

namespace {

Distribution finish_distribution(Distribution p) {
  double sum = 0.0;
  for (double& v : p) {
    if (v < 0.0) {
      if (v < -kProbabilityClip) {
        throw DomainError("outcome_distribution: negative probability " + std::to_string(v));
      }
      v = 0.0;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw NormalizationError("outcome_distribution: probabilities sum to " + std::to_string(sum));
  }
  return p;
}

}  // namespace

Distribution outcome_distribution(const Observable& e, const DensityState& rho) {
  if (e.dim() != rho.dim()) {
    throw DimensionError("outcome_distribution: dimension " + dims_str(e.dim(), rho.dim()));
  }
  Distribution p(e.size());
  for (std::size_t x = 0; x < e.size(); ++x) {
    p[x] = e.effect(x).cwiseProduct(rho.matrix().transpose()).sum().real();
  }
  return finish_distribution(std::move(p));
}

Distribution outcome_distribution(const Observable& e, const ComplexVector& psi) {
  if (static_cast<Eigen::Index>(e.dim()) != psi.size()) {
    throw DimensionError("outcome_distribution: dimension " +
                         dims_str(e.dim(), static_cast<std::size_t>(psi.size())));
  }
  Distribution p(e.size());
  for (std::size_t x = 0; x < e.size(); ++x) {
    p[x] = psi.dot(e.effect(x) * psi).real();
  }
  return finish_distribution(std::move(p));
}

double fidelity(const DensityState& rho1, const DensityState& rho2) {
  if (rho1.dim() != rho2.dim()) {
    throw DimensionError("fidelity: dimension " + dims_str(rho1.dim(), rho2.dim()));
  }
  const Eigen::MatrixXcd prod = psd_sqrt(rho1.matrix()) * psd_sqrt(rho2.matrix());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(prod);
  return std::clamp(svd.singularValues().sum(), 0.0, 1.0);
}

double fidelity(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw DimensionError("fidelity: vector length mismatch");
  return std::min(1.0, std::abs(a.dot(b)));
}

}  // namespace qmm
