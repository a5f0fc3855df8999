// Copyright 2026 The oomkit Authors.
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

#include <iosfwd>
#include <memory>
#include <vector>

#include "oom/enumeration.hpp"
#include "oom/future_function.hpp"

namespace oom {

inline constexpr double kDefaultRankTolerance = 1e-8;

/// Depth-g(w)/P(w) ratio along a single sequence: the finite-depth surrogate
/// of the density of g with respect to the process measure.
/// Throws ZeroProbability if P(prefix) = 0.
double density_estimate(const FutureFunction& g, const Word& prefix);

/// S_n(g1, g2) = sum over |w| = n with P(w) > 0 of g1(w) g2(w) / P(w).
/// Zero-probability subtrees are pruned; summation is lexicographic.
double inner_product_truncated(const FutureFunction& g1, const FutureFunction& g2, int n,
                               const EnumerationOptions& options = {});

/// The same quantity for basis functions g_c, g_d computed only from
/// composite operators and sigma:
/// 1/(P(c)P(d)) * sum_w sigma(tau_{cw} w_eps) sigma(tau_{dw} w_eps) / sigma(tau_w w_eps).
/// Throws ZeroProbability if P(c) or P(d) is 0.
double inner_product_operator_form(const MatrixOom& m, const Word& cbar, const Word& dbar, int n,
                                   const EnumerationOptions& options = {});

/// Truncated sums S_1..S_N. `stabilized` reports that the last `window`
/// values moved by less than the tolerance between consecutive depths.
/// Stabilization is evidence, not proof, that the limit exists.
struct ConvergenceReport {
  std::vector<double> values;
  bool stabilized = false;
  /// max |S_n - S_{n-1}| over the last window.
  double tail_delta = 0.0;
  int depth_reached = 0;
  int window = 0;
  double tolerance = 0.0;
};

/// Computes S_1, S_2, ... until `window` consecutive values agree within
/// `tol` or `max_depth` is reached. Requires tol > 0 and
/// max_depth >= window >= 2.
ConvergenceReport inner_product_converged(const FutureFunction& g1, const FutureFunction& g2, double tol,
                                          int max_depth, int window, const EnumerationOptions& options = {});

double norm2_truncated(const FutureFunction& g, int n, const EnumerationOptions& options = {});

/// S_{n+1}(g, g) - S_n(t_a g, t_a g); non-negative for a valid model.
double contraction_check(const FutureFunction& g, Symbol a, int n, const EnumerationOptions& options = {});

struct GramMatrix {
  std::vector<Word> prefixes;
  int depth = 0;
  Matrix entries;
  /// Ascending.
  std::vector<double> eigenvalues;
  int numerical_rank = 0;
  double rank_tolerance = kDefaultRankTolerance;
};

/// Entries S_n(g_c, g_d) over the prefix family, eigenvalues of the
/// symmetrized matrix, and the number of eigenvalues above
/// rank_tol * (largest eigenvalue). Throws ZeroProbability for a
/// zero-probability prefix.
GramMatrix gram_matrix(std::shared_ptr<const MatrixOom> model, const std::vector<Word>& prefixes, int n,
                       double rank_tol = kDefaultRankTolerance, const EnumerationOptions& options = {});

/// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

/// CSV: header "depth,value", then one row per depth.
void write_csv(std::ostream& out, const ConvergenceReport& report);
/// CSV: header row of prefixes, then the square matrix.
void write_csv(std::ostream& out, const GramMatrix& gram, const Alphabet& alphabet);

}  // namespace oom
