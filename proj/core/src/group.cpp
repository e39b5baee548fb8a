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

#include "qmm/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "qmm/errors.hpp"

namespace qmm {

// --- FiniteGroup ----------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw DomainError("FiniteGroup: empty group");
  if (table_.size() != n) throw DimensionError("FiniteGroup: table has wrong number of rows");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw DomainError("FiniteGroup: duplicate element names");
  }

  // Latin square.
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw DimensionError("FiniteGroup: ragged table");
    std::vector<bool> row_seen(n, false);
    std::vector<bool> col_seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t r = table_[a][b];
      if (r >= n) throw DomainError("FiniteGroup: table entry out of range");
      row_seen[r] = true;
    }
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = table_[b][a];
      if (c >= n) throw DomainError("FiniteGroup: table entry out of range");
      col_seen[c] = true;
    }
    if (std::find(row_seen.begin(), row_seen.end(), false) != row_seen.end() ||
        std::find(col_seen.begin(), col_seen.end(), false) != col_seen.end()) {
      throw DomainError("FiniteGroup: table is not a Latin square");
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw DomainError("FiniteGroup: no identity element");

  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_) {
        if (table_[b][a] != identity_) throw DomainError("FiniteGroup: inverses inconsistent");
        inverse_[a] = b;
      }
    }
  }

  if (n <= kAssociativityCheckLimit) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw DomainError("FiniteGroup: table is not associative");
          }
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::quaternion() {
  // Unit quaternions 1, i, j, k as indices 0..3; element index 2*unit + (negative).
  // unit_product[a][b] = {sign, unit} of a*b.
  const std::array<std::array<std::pair<int, int>, 4>, 4> unit_product{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const int sign_a = (a % 2 == 0) ? 1 : -1;
      const int sign_b = (b % 2 == 0) ? 1 : -1;
      const auto [s, u] = unit_product[a / 2][b / 2];
      const int sign = sign_a * sign_b * s;
      table[a][b] = static_cast<std::size_t>(2 * u + (sign < 0 ? 1 : 0));
    }
  }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::phase_space(std::size_t d) {
  if (d == 0) throw DomainError("FiniteGroup::phase_space: d must be positive");
  std::vector<std::string> names;
  names.reserve(d * d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      names.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  std::vector<std::vector<std::size_t>> table(d * d, std::vector<std::size_t>(d * d));
  for (std::size_t a = 0; a < d * d; ++a) {
    for (std::size_t b = 0; b < d * d; ++b) {
      const std::size_t x = (a / d + b / d) % d;
      const std::size_t y = (a % d + b % d) % d;
      table[a][b] = x * d + y;
    }
  }
  return FiniteGroup(std::move(names), std::move(table));
}

std::optional<std::size_t> FiniteGroup::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FiniteGroup::at(std::string_view name) const {
  const auto idx = index_of(name);
  if (!idx) throw DomainError("FiniteGroup: unknown element '" + std::string(name) + "'");
  return *idx;
}

std::size_t FiniteGroup::power(std::size_t a, std::size_t k) const {
  std::size_t out = identity_;
  for (std::size_t i = 0; i < k; ++i) out = table_[out][a];
  return out;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = table_[x][a]) ++k;
  return k;
}

// --- ProjectiveRepresentation ---------------------------------------------

ProjectiveRepresentation::ProjectiveRepresentation(FiniteGroup group,
                                                   std::vector<ComplexMatrix> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  if (matrices_.size() != group_.order()) {
    throw DimensionError("ProjectiveRepresentation: need one matrix per group element");
  }
  degree_ = static_cast<std::size_t>(matrices_.front().rows());
  for (std::size_t g = 0; g < matrices_.size(); ++g) {
    const auto& u = matrices_[g];
    if (static_cast<std::size_t>(u.rows()) != degree_ || u.rows() != u.cols()) {
      throw DimensionError("ProjectiveRepresentation: inconsistent matrix sizes");
    }
    if (!is_unitary(u, kUnitaryTolerance)) {
      throw DomainError("ProjectiveRepresentation: U(" + group_.name(g) + ") is not unitary");
    }
  }
  for (std::size_t g = 0; g < group_.order(); ++g) {
    for (std::size_t h = 0; h < group_.order(); ++h) {
      const Complex mu = multiplier(g, h);
      const ComplexMatrix residual =
          matrices_[g] * matrices_[h] - mu * matrices_[group_.multiply(g, h)];
      if (std::abs(std::abs(mu) - 1.0) > kMultiplierTolerance ||
          residual.cwiseAbs().maxCoeff() > kMultiplierTolerance) {
        throw DomainError("ProjectiveRepresentation: U(" + group_.name(g) + ")U(" +
                          group_.name(h) + ") is not a phase multiple of U(gh)");
      }
    }
  }
}

Complex ProjectiveRepresentation::multiplier(std::size_t g, std::size_t h) const {
  const ComplexMatrix& gh = matrices_.at(group_.multiply(g, h));
  return (gh.adjoint() * matrices_.at(g) * matrices_.at(h)).trace() /
         static_cast<double>(degree_);
}

bool ProjectiveRepresentation::is_ordinary(double tol) const {
  for (std::size_t g = 0; g < group_.order(); ++g) {
    for (std::size_t h = 0; h < group_.order(); ++h) {
      if (std::abs(multiplier(g, h) - Complex{1.0, 0.0}) > tol) return false;
    }
  }
  return true;
}

ProjectiveRepresentation q8_representation() {
  const Complex i{0.0, 1.0};
  ComplexMatrix id = identity(2);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -i, i, 0;
  sz << 1, 0, 0, -1;
  std::vector<ComplexMatrix> m{id, -id, i * sx, -i * sx, -i * sy, i * sy, i * sz, -i * sz};
  return ProjectiveRepresentation(FiniteGroup::quaternion(), std::move(m));
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

ProjectiveRepresentation weyl_heisenberg(std::size_t d) {
  if (!is_prime(d)) {
    throw DomainError("weyl_heisenberg: d = " + std::to_string(d) + " is not prime");
  }
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<ComplexMatrix> m;
  m.reserve(d * d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      ComplexMatrix u = ComplexMatrix::Zero(n, n);
      for (std::size_t k = 0; k < d; ++k) {
        // Reduce the exponent mod d before forming the phase.
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((y * k) % d) /
                             static_cast<double>(d);
        u(static_cast<Eigen::Index>((k + x) % d), static_cast<Eigen::Index>(k)) = std::polar(1.0, angle);
      }
      m.push_back(std::move(u));
    }
  }
  return ProjectiveRepresentation(FiniteGroup::phase_space(d), std::move(m));
}

// --- Subgroups and cosets -------------------------------------------------

CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, std::size_t generator) {
  if (generator >= g.order()) throw DomainError("cyclic_subgroup: generator out of range");
  CyclicSubgroup h;
  h.generator = generator;
  std::size_t x = g.identity();
  do {
    h.elements.push_back(x);
    x = g.multiply(x, generator);
  } while (x != g.identity());
  return h;
}

std::vector<CyclicSubgroup> cyclic_subgroups(const FiniteGroup& g, std::size_t n) {
  if (n == 0 || g.order() % n != 0) {
    throw DomainError("cyclic_subgroups: " + std::to_string(n) + " does not divide the group order");
  }
  std::vector<CyclicSubgroup> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (g.element_order(a) != n) continue;
    auto h = cyclic_subgroup(g, a);
    auto key = h.elements;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(h));
  }
  return out;
}

bool is_valid_subgroup(const FiniteGroup& g, const CyclicSubgroup& h) {
  if (h.generator >= g.order() || h.elements.empty()) return false;
  if (h.elements != cyclic_subgroup(g, h.generator).elements) return false;
  const std::set<std::size_t> members(h.elements.begin(), h.elements.end());
  for (std::size_t a : h.elements) {
    for (std::size_t b : h.elements) {
      if (!members.contains(g.multiply(a, b))) return false;
    }
  }
  return true;
}

std::vector<Coset> left_cosets(const FiniteGroup& g, const CyclicSubgroup& h) {
  if (!is_valid_subgroup(g, h)) {
    throw DomainError("left_cosets: element list is not the cyclic subgroup of its generator");
  }
  std::vector<bool> assigned(g.order(), false);
  std::vector<Coset> out;
  auto add_coset = [&](std::size_t rep) {
    Coset c;
    c.representative = rep;
    for (std::size_t x : h.elements) {
      const std::size_t y = g.multiply(rep, x);
      c.elements.push_back(y);
      assigned[y] = true;
    }
    out.push_back(std::move(c));
  };
  add_coset(*std::min_element(h.elements.begin(), h.elements.end()));
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (!assigned[a]) add_coset(a);
  }
  return out;
}

}  // namespace qmm
