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

/// Finite group given by its Cayley table. Element 0 need not be the
/// identity; the identity and inverses are recovered from the table.
class FiniteGroup {
 public:
  /// Groups up to this order are checked for associativity exhaustively.
  static constexpr std::size_t kAssociativityCheckLimit = 64;

  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);

  /// Quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
  static FiniteGroup quaternion();
  /// Z_d x Z_d with element (x, y) at index x*d + y, named "(x,y)".
  static FiniteGroup phase_space(std::size_t d);

  std::size_t order() const { return names_.size(); }
  const std::string& name(std::size_t g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws DomainError for unknown names.
  std::size_t at(std::string_view name) const;

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  std::size_t power(std::size_t a, std::size_t k) const;
  std::size_t element_order(std::size_t a) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Unitary matrices U(g) with U(g)U(h) = mu(g,h) U(gh), |mu| = 1.
class ProjectiveRepresentation {
 public:
  static constexpr double kUnitaryTolerance = 1e-10;
  static constexpr double kMultiplierTolerance = 1e-9;

  ProjectiveRepresentation(FiniteGroup group, std::vector<ComplexMatrix> matrices);

  const FiniteGroup& group() const { return group_; }
  std::size_t degree() const { return degree_; }
  const ComplexMatrix& matrix(std::size_t g) const { return matrices_.at(g); }
  const ComplexMatrix& matrix(std::string_view name) const { return matrices_.at(group_.at(name)); }
  const std::vector<ComplexMatrix>& matrices() const { return matrices_; }

  /// mu(g, h) from U(g)U(h) = mu U(gh).
  Complex multiplier(std::size_t g, std::size_t h) const;
  /// All multipliers equal 1 within tol.
  bool is_ordinary(double tol = kMultiplierTolerance) const;

 private:
  FiniteGroup group_;
  std::size_t degree_ = 0;
  std::vector<ComplexMatrix> matrices_;
};

/// Degree-2 representation U(+-1) = +-1, U(+-i) = +-i sigma_x,
/// U(+-j) = -+i sigma_y, U(+-k) = +-i sigma_z.
ProjectiveRepresentation q8_representation();

/// Displacements U(x,y) phi_k = omega^{yk} phi_{k+x}, omega = exp(2 pi i / d).
/// Throws DomainError unless d is prime.
ProjectiveRepresentation weyl_heisenberg(std::size_t d);

bool is_prime(std::size_t n);

struct CyclicSubgroup {
  std::size_t generator = 0;
  std::vector<std::size_t> elements;  // e, h, h^2, ...
  std::size_t order() const { return elements.size(); }
};

CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, std::size_t generator);

/// Every distinct cyclic subgroup of order n; each is generated by its
/// smallest-index generator. Throws DomainError unless n divides |G|.
std::vector<CyclicSubgroup> cyclic_subgroups(const FiniteGroup& g, std::size_t n);

/// Elements of h are exactly the powers of its generator and form a subgroup.
bool is_valid_subgroup(const FiniteGroup& g, const CyclicSubgroup& h);

struct Coset {
  std::size_t representative;          // smallest element index in the coset
  std::vector<std::size_t> elements;   // representative * h for h in H (H order)
};

/// Left cosets gH. The coset of the identity comes first, the rest ordered by
/// representative. Throws DomainError when h is not a subgroup.
std::vector<Coset> left_cosets(const FiniteGroup& g, const CyclicSubgroup& h);

}  // namespace qmm
