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

#include "qmm/covariant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "qmm/errors.hpp"

namespace qmm {

namespace {

std::vector<std::string> coset_labels(const FiniteGroup& g, const std::vector<Coset>& cosets) {
  std::vector<std::string> labels;
  labels.reserve(cosets.size());
  for (const auto& c : cosets) labels.push_back(g.name(c.representative) + "H");
  return labels;
}

double phase_of(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (2.0 * std::numbers::pi - a < 1e-9) a = 0.0;
  return a;
}

void fix_global_phase(ComplexVector& v) {
  const double top = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= top - 1e-9) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      return;
    }
  }
}

}  // namespace

Observable covariant_observable(const ProjectiveRepresentation& rep, const DensityState& seed) {
  if (seed.dim() != rep.degree()) {
    throw DimensionError("covariant_observable: seed dimension " + std::to_string(seed.dim()) +
                         " differs from representation degree " + std::to_string(rep.degree()));
  }
  const double scale =
      static_cast<double>(rep.degree()) / static_cast<double>(rep.group().order());
  std::vector<ComplexMatrix> effects;
  effects.reserve(rep.group().order());
  for (const auto& u : rep.matrices()) {
    effects.push_back(hermitian_part(scale * (u * seed.matrix() * u.adjoint())));
  }
  try {
    return Observable(rep.group().names(), std::move(effects));
  } catch (const NormalizationError& e) {
    throw NormalizationError(std::string("covariant_observable: effects do not sum to the "
                                         "identity (representation not irreducible?): ") +
                             e.what());
  }
}

PostProcessing coset_postprocessing(const FiniteGroup& g, const CyclicSubgroup& h) {
  const auto cosets = left_cosets(g, h);
  std::vector<std::size_t> target(g.order());
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    for (std::size_t x : cosets[c].elements) target[x] = c;
  }
  return PostProcessing::from_assignment(target, cosets.size(), coset_labels(g, cosets));
}

EigenPrograms eigenvector_program_states(const ProjectiveRepresentation& rep,
                                         std::size_t generator) {
  const auto& g = rep.group();
  if (generator >= g.order()) throw DomainError("eigenvector_program_states: bad generator");
  const std::size_t expected = g.order() / rep.degree();
  if (g.order() % rep.degree() != 0 || g.element_order(generator) != expected) {
    throw DomainError("eigenvector_program_states: generator '" + g.name(generator) +
                      "' does not have order |G|/d = " + std::to_string(expected));
  }

  // U(h) is normal, so its Schur form is diagonal and the Schur vectors are
  // an orthonormal eigenbasis even inside degenerate eigenspaces.
  const Eigen::MatrixXcd u = rep.matrix(generator);
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
  const Eigen::MatrixXcd& q = schur.matrixU();
  const Eigen::MatrixXcd& t = schur.matrixT();

  const Eigen::Index n = u.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return phase_of(t(a, a)) < phase_of(t(b, b));
  });

  EigenPrograms out;
  for (Eigen::Index k : order) {
    ComplexVector v = q.col(k);
    const Complex lambda = t(k, k);
    if ((u * v - lambda * v).norm() > 1e-9) {
      throw DomainError("eigenvector_program_states: Schur vector is not an eigenvector");
    }
    fix_global_phase(v);
    out.vectors.push_back(std::move(v));
    out.eigenvalues.push_back(lambda);
  }
  for (std::size_t a = 0; a < out.eigenvalues.size(); ++a) {
    for (std::size_t b = a + 1; b < out.eigenvalues.size(); ++b) {
      if (std::abs(out.eigenvalues[a] - out.eigenvalues[b]) < 1e-8) out.degenerate = true;
    }
  }
  return out;
}

bool is_invariant_under(const ProjectiveRepresentation& rep, const CyclicSubgroup& h,
                        const ComplexVector& psi, double tol) {
  const ComplexMatrix p = outer(psi / psi.norm());
  return std::all_of(h.elements.begin(), h.elements.end(), [&](std::size_t g) {
    const auto& u = rep.matrix(g);
    return max_abs_diff(u * p * u.adjoint(), p) <= tol;
  });
}

Observable sharp_from_subgroup(const ProjectiveRepresentation& rep, const CyclicSubgroup& h,
                               const ComplexVector& psi) {
  if (static_cast<std::size_t>(psi.size()) != rep.degree()) {
    throw DimensionError("sharp_from_subgroup: vector length differs from degree");
  }
  if (!is_invariant_under(rep, h, psi)) {
    throw DomainError("sharp_from_subgroup: psi is not an eigenvector of U(" +
                      rep.group().name(h.generator) + ")");
  }
  const auto cosets = left_cosets(rep.group(), h);
  const ComplexMatrix p = outer(psi / psi.norm());
  std::vector<ComplexMatrix> effects;
  effects.reserve(cosets.size());
  for (const auto& c : cosets) {
    const auto& u = rep.matrix(c.representative);
    effects.push_back(hermitian_part(u * p * u.adjoint()));
  }
  return Observable(coset_labels(rep.group(), cosets), std::move(effects));
}

Multimeter covariant_multimeter(const ProjectiveRepresentation& rep) {
  const std::size_t d = rep.degree();
  const auto n = static_cast<Eigen::Index>(d);
  const double group_order = static_cast<double>(rep.group().order());

  ComplexVector omega = ComplexVector::Zero(n * n);
  for (Eigen::Index l = 0; l < n; ++l) omega(l * n + l) = 1.0 / std::sqrt(static_cast<double>(d));

  const ComplexMatrix id = identity(d);
  std::vector<ComplexMatrix> pointer_effects;
  pointer_effects.reserve(rep.group().order());
  for (const auto& u : rep.matrices()) {
    const ComplexVector ug = tensor(u, id) * omega;
    pointer_effects.push_back(static_cast<double>(d * d) / group_order * outer(ug));
  }
  Observable pointer(rep.group().names(), std::move(pointer_effects));

  // |a, b, c> -> |b, a, c>
  const Eigen::Index n3 = n * n * n;
  ComplexMatrix swap = ComplexMatrix::Zero(n3, n3);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      for (Eigen::Index c = 0; c < n; ++c) swap(b * n * n + a * n + c, a * n * n + b * n + c) = 1.0;
    }
  }
  return Multimeter(d, std::move(pointer), QuantumChannel::unitary(swap));
}

DensityState covariant_program_state(const DensityState& eta, const DensityState& xi) {
  if (eta.dim() != xi.dim()) {
    throw DimensionError("covariant_program_state: eta and xi must share a dimension");
  }
  return DensityState::from_matrix(tensor(eta.matrix(), xi.matrix().transpose().eval()));
}

ComplexVector phase_space_formula_vector(std::size_t d, std::size_t k) {
  if (d == 0 || k >= d) throw DomainError("phase_space_formula_vector: need 0 <= k < d");
  ComplexVector v(static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    // j(j-1)/2 is an integer, so the exponent can be reduced mod d exactly.
    const std::size_t tri = (j * (j == 0 ? 0 : j - 1) / 2) % d;
    const std::size_t exponent = (tri * k % d + d - j % d) % d;
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(exponent) / static_cast<double>(d);
    v(static_cast<Eigen::Index>(j)) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), angle);
  }
  return v;
}

std::vector<PhaseSpaceProgram> phase_space_programs(const ProjectiveRepresentation& wh) {
  const std::size_t d = wh.degree();
  const auto& g = wh.group();
  if (g.order() != d * d) {
    throw DomainError("phase_space_programs: expected the Z_d x Z_d displacement representation");
  }
  std::vector<PhaseSpaceProgram> out;
  auto add = [&](const std::string& name, ComplexVector formula) {
    const std::size_t gen = g.at(name);
    const auto eig = eigenvector_program_states(wh, gen);
    const ComplexMatrix& u = wh.matrix(gen);
    const Complex rayleigh = formula.dot(u * formula);
    const bool verified = (u * formula - rayleigh * formula).norm() <= 1e-8;

    std::size_t pick = 0;
    if (verified) {
      double best = -1.0;
      for (std::size_t s = 0; s < eig.vectors.size(); ++s) {
        const double overlap = std::abs(eig.vectors[s].dot(formula));
        if (overlap > best) {
          best = overlap;
          pick = s;
        }
      }
    }
    out.push_back(PhaseSpaceProgram{gen, cyclic_subgroup(g, gen), std::move(formula),
                                    eig.vectors[pick], eig.eigenvalues[pick], verified});
  };

  ComplexVector phi0 = ComplexVector::Zero(static_cast<Eigen::Index>(d));
  phi0(0) = 1.0;
  add("(0,1)", std::move(phi0));
  for (std::size_t k = 0; k < d; ++k) {
    add("(1," + std::to_string(k) + ")", phase_space_formula_vector(d, k));
  }
  return out;
}

}  // namespace qmm
