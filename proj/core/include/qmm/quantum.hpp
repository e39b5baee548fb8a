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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmm/linalg.hpp"

namespace qmm {

/// Discrete probability vector indexed like the outcomes of an Observable.
using Distribution = std::vector<double>;

/// Positive unit-trace matrix. Construction validates; inputs whose negative
/// eigenvalue mass is below `kReprojectThreshold` are clipped back onto the
/// PSD cone and renormalized, anything worse is rejected.
class DensityState {
 public:
  static constexpr double kTraceTolerance = 1e-9;
  static constexpr double kReprojectThreshold = 1e-9;

  static DensityState from_matrix(const ComplexMatrix& m);
  /// |v><v| / <v|v>. Throws DomainError for the zero vector.
  static DensityState pure(const ComplexVector& v);
  static DensityState maximally_mixed(std::size_t dim);
  /// Computational basis state |index>.
  static DensityState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double purity() const;

 private:
  explicit DensityState(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Finite POVM with opaque string outcome labels.
class Observable {
 public:
  static constexpr double kNormalizationTolerance = 1e-9;
  static constexpr double kSharpTolerance = 1e-8;

  /// Validates positivity (within tol_psd) and sum-to-identity (within
  /// tol_norm). Labels must be unique and match the effect count.
  Observable(std::vector<std::string> labels, std::vector<ComplexMatrix> effects,
             double tol_norm = kNormalizationTolerance, double tol_psd = kDefaultTolerances.psd);

  /// Labels "0", "1", ...
  static Observable with_index_labels(std::vector<ComplexMatrix> effects,
                                      double tol_norm = kNormalizationTolerance);
  /// Rank-1 PVM onto the columns of a unitary.
  static Observable from_basis(const ComplexMatrix& unitary);
  /// n effects, each identity / n.
  static Observable trivial(std::size_t dim, std::size_t outcomes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return effects_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  const ComplexMatrix& effect(std::size_t i) const { return effects_.at(i); }
  const ComplexMatrix& effect(std::string_view label) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// E(x)^2 = E(x) for every effect within tol.
  bool is_sharp(double tol = kSharpTolerance) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<ComplexMatrix> effects_;
};

/// Largest entrywise deviation between effects with the same position.
/// Throws DimensionError when outcome counts or dimensions differ.
double max_effect_diff(const Observable& a, const Observable& b);

/// Worst violation of E(x)^2 = E(x) and E(x)E(y) = 0 (x != y).
double pvm_defect(const Observable& e);

/// Kraus-form channel from T(C^in) to T(C^out).
class QuantumChannel {
 public:
  static constexpr double kTraceTolerance = 1e-9;

  explicit QuantumChannel(std::vector<ComplexMatrix> kraus, double tol = kTraceTolerance);

  static QuantumChannel identity(std::size_t dim);
  static QuantumChannel unitary(const ComplexMatrix& u);

  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// Schrodinger picture on a raw operator.
  ComplexMatrix apply(const ComplexMatrix& t) const;
  /// Heisenberg picture: sum_k K^dagger B K.
  ComplexMatrix apply_dual(const ComplexMatrix& b) const;

 private:
  std::size_t in_dim_ = 0;
  std::size_t out_dim_ = 0;
  std::vector<ComplexMatrix> kraus_;
};

DensityState apply_channel(const QuantumChannel& c, const DensityState& rho);
Observable dual_apply(const QuantumChannel& c, const Observable& e);

/// Stinespring form of a channel with in_dim == out_dim: a unitary on
/// system (x) ancilla and a fixed ancilla state |0><0| such that
/// E(rho) = tr_anc[U (rho (x) |0><0|) U^dagger]. Ancilla dimension is the
/// number of Kraus operators.
struct UnitaryDilation {
  ComplexMatrix unitary;
  DensityState ancilla;
  std::size_t system_dim;
  std::size_t ancilla_dim;
};

UnitaryDilation unitary_dilation(const QuantumChannel& c);

/// Dual map evaluated through the dilation:
/// tr_anc[U^dagger (B (x) 1) U (1 (x) ancilla)].
ComplexMatrix dilation_dual(const UnitaryDilation& d, const ComplexMatrix& b);

/// Programmable device <K, Z, V>: probe dimension, pointer observable on the
/// probe and an interaction channel on system (x) probe.
class Multimeter {
 public:
  Multimeter(std::size_t system_dim, Observable pointer, QuantumChannel interaction);

  std::size_t system_dim() const { return system_dim_; }
  std::size_t probe_dim() const { return pointer_.dim(); }
  const Observable& pointer() const { return pointer_; }
  const QuantumChannel& interaction() const { return interaction_; }

 private:
  std::size_t system_dim_;
  Observable pointer_;
  QuantumChannel interaction_;
};

/// A multimeter together with its initial probe state.
class MeasurementModel {
 public:
  MeasurementModel(Multimeter device, DensityState probe_state);

  const Multimeter& device() const { return device_; }
  const DensityState& probe_state() const { return probe_state_; }

 private:
  Multimeter device_;
  DensityState probe_state_;
};

/// E(x) = tr_K[V*(1 (x) Z(x)) (1 (x) xi)], labels copied from the pointer.
Observable induced_observable(const MeasurementModel& model);

Observable program(const Multimeter& m, const DensityState& xi);

/// p(x) = tr[E(x) rho]. Entries in [-1e-12, 0) are clipped to zero.
Distribution outcome_distribution(const Observable& e, const DensityState& rho);
/// Same for the pure state |psi> (assumed normalized).
Distribution outcome_distribution(const Observable& e, const ComplexVector& psi);

/// tr sqrt(sqrt(rho1) rho2 sqrt(rho1)), evaluated as the trace norm of
/// sqrt(rho1) sqrt(rho2).
double fidelity(const DensityState& rho1, const DensityState& rho2);
/// |<a|b>| for normalized vectors.
double fidelity(const ComplexVector& a, const ComplexVector& b);

}  // namespace qmm
