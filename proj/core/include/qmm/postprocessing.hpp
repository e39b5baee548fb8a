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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qmm/quantum.hpp"

namespace qmm {

/// Row-stochastic relabelling kernel: kernel(i, j) is the probability that
/// input outcome i is reported as output outcome j.
class PostProcessing {
 public:
  static constexpr double kRowTolerance = 1e-12;

  /// Output labels default to "0", "1", ...
  explicit PostProcessing(Eigen::MatrixXd kernel, std::vector<std::string> output_labels = {});

  static PostProcessing identity(std::size_t n);
  /// Single output collecting every input.
  static PostProcessing all_merge(std::size_t n);
  /// kernel(i, j) = 1/m for every i.
  static PostProcessing uniform(std::size_t n_in, std::size_t n_out);
  /// Deterministic map i -> target[i].
  static PostProcessing from_assignment(const std::vector<std::size_t>& target, std::size_t n_out,
                                        std::vector<std::string> output_labels = {});

  std::size_t n_in() const { return static_cast<std::size_t>(kernel_.rows()); }
  std::size_t n_out() const { return static_cast<std::size_t>(kernel_.cols()); }
  const Eigen::MatrixXd& kernel() const { return kernel_; }
  double operator()(std::size_t i, std::size_t j) const { return kernel_(i, j); }
  const std::vector<std::string>& output_labels() const { return labels_; }

  bool is_deterministic() const;

 private:
  Eigen::MatrixXd kernel_;
  std::vector<std::string> labels_;
};

/// F(j) = sum_i kernel(i, j) E(i); output labels from the kernel.
Observable post_process_observable(const PostProcessing& l, const Observable& e);

/// (l * p)(j) = sum_i kernel(i, j) p(i).
Distribution post_process_distribution(const PostProcessing& l, const Distribution& p);

/// min_i sum_j sqrt(l1(i, j) l2(i, j)), which equals the infimum over input
/// distributions p of B(l1 * p, l2 * p).
double pp_fidelity(const PostProcessing& l1, const PostProcessing& l2);

/// Kernel of "apply inner, then outer".
PostProcessing compose(const PostProcessing& outer, const PostProcessing& inner);

}  // namespace qmm
