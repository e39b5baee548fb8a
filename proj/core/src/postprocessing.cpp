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

#include "qmm/postprocessing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qmm/errors.hpp"

namespace qmm {

namespace {

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

PostProcessing::PostProcessing(Eigen::MatrixXd kernel, std::vector<std::string> output_labels)
    : kernel_(std::move(kernel)), labels_(std::move(output_labels)) {
  if (kernel_.rows() == 0 || kernel_.cols() == 0) {
    throw DimensionError("PostProcessing: empty kernel");
  }
  if (labels_.empty()) labels_ = index_labels(n_out());
  if (labels_.size() != n_out()) {
    throw DimensionError("PostProcessing: output label count does not match n_out");
  }
  for (Eigen::Index i = 0; i < kernel_.rows(); ++i) {
    for (Eigen::Index j = 0; j < kernel_.cols(); ++j) {
      const double v = kernel_(i, j);
      if (!(v >= -kRowTolerance && v <= 1.0 + kRowTolerance)) {
        throw DomainError("PostProcessing: entry (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") outside [0, 1]");
      }
      kernel_(i, j) = std::clamp(v, 0.0, 1.0);
    }
    const double row = kernel_.row(i).sum();
    if (std::abs(row - 1.0) > kRowTolerance) {
      throw NormalizationError("PostProcessing: row " + std::to_string(i) + " sums to " +
                               std::to_string(row));
    }
  }
}

PostProcessing PostProcessing::identity(std::size_t n) {
  return PostProcessing(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                                  static_cast<Eigen::Index>(n)));
}

PostProcessing PostProcessing::all_merge(std::size_t n) {
  return PostProcessing(Eigen::MatrixXd::Ones(static_cast<Eigen::Index>(n), 1));
}

PostProcessing PostProcessing::uniform(std::size_t n_in, std::size_t n_out) {
  return PostProcessing(Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(n_in),
                                                  static_cast<Eigen::Index>(n_out),
                                                  1.0 / static_cast<double>(n_out)));
}

PostProcessing PostProcessing::from_assignment(const std::vector<std::size_t>& target,
                                               std::size_t n_out,
                                               std::vector<std::string> output_labels) {
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(target.size()),
                                            static_cast<Eigen::Index>(n_out));
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] >= n_out) throw DimensionError("PostProcessing: assignment out of range");
    k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(target[i])) = 1.0;
  }
  return PostProcessing(std::move(k), std::move(output_labels));
}

bool PostProcessing::is_deterministic() const {
  return (kernel_.array() == 0.0 || kernel_.array() == 1.0).all();
}

Observable post_process_observable(const PostProcessing& l, const Observable& e) {
  if (l.n_in() != e.size()) {
    throw DimensionError("post_process_observable: kernel expects " + std::to_string(l.n_in()) +
                         " outcomes, observable has " + std::to_string(e.size()));
  }
  const auto d = static_cast<Eigen::Index>(e.dim());
  std::vector<ComplexMatrix> effects(l.n_out(), ComplexMatrix::Zero(d, d));
  for (std::size_t i = 0; i < l.n_in(); ++i) {
    for (std::size_t j = 0; j < l.n_out(); ++j) {
      const double w = l(i, j);
      if (w != 0.0) effects[j] += w * e.effect(i);
    }
  }
  return Observable(l.output_labels(), std::move(effects), 1e-8);
}

Distribution post_process_distribution(const PostProcessing& l, const Distribution& p) {
  if (l.n_in() != p.size()) {
    throw DimensionError("post_process_distribution: kernel expects length " +
                         std::to_string(l.n_in()) + ", got " + std::to_string(p.size()));
  }
  Distribution out(l.n_out(), 0.0);
  for (std::size_t i = 0; i < l.n_in(); ++i) {
    for (std::size_t j = 0; j < l.n_out(); ++j) out[j] += l(i, j) * p[i];
  }
  return out;
}

double pp_fidelity(const PostProcessing& l1, const PostProcessing& l2) {
  if (l1.n_in() != l2.n_in() || l1.n_out() != l2.n_out()) {
    throw DimensionError("pp_fidelity: kernel shapes differ");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < l1.n_in(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < l1.n_out(); ++j) row += std::sqrt(l1(i, j) * l2(i, j));
    best = std::min(best, row);
  }
  return std::clamp(best, 0.0, 1.0);
}

PostProcessing compose(const PostProcessing& outer, const PostProcessing& inner) {
  if (inner.n_out() != outer.n_in()) {
    throw DimensionError("compose: inner produces " + std::to_string(inner.n_out()) +
                         " outcomes, outer expects " + std::to_string(outer.n_in()));
  }
  Eigen::MatrixXd k = inner.kernel() * outer.kernel();
  // Renormalize rows against accumulated rounding.
  for (Eigen::Index i = 0; i < k.rows(); ++i) k.row(i) /= k.row(i).sum();
  return PostProcessing(std::move(k), outer.output_labels());
}

}  // namespace qmm
