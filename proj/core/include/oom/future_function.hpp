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

#include <memory>
#include <vector>

#include "oom/enumeration.hpp"
#include "oom/matrix_oom.hpp"

namespace oom {

/// A finite linear combination sum_c alpha_c * g_c of conditional future
/// distributions g_c(w) = P(w | c) (g_c = 0 when P(c) = 0).
///
/// Terms keep first-insertion order; that order fixes the floating-point
/// summation order of evaluate(). Two functions are only ever compared by
/// evaluation on words of bounded length.
class FutureFunction {
 public:
  struct Term {
    Word prefix;
    double coefficient = 0.0;
  };

  explicit FutureFunction(std::shared_ptr<const MatrixOom> model);

  static FutureFunction zero(std::shared_ptr<const MatrixOom> model);
  /// The basis function g_prefix.
  static FutureFunction basis(std::shared_ptr<const MatrixOom> model, Word prefix);

  const MatrixOom& model() const { return *model_; }
  const std::shared_ptr<const MatrixOom>& model_ptr() const { return model_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Adds alpha * g_prefix, merging with an existing term for the same prefix.
  FutureFunction& add_term(const Word& prefix, double alpha);
  /// Removes zero-coefficient terms. Evaluation is unchanged.
  FutureFunction& prune_zeros();

  /// Matrix-level representative: sum_c alpha_c * tau_c w_eps / P(c), so that
  /// g(w) = sigma * tau_w * state().
  Vector state() const;

  FutureFunction& operator+=(const FutureFunction& other);
  FutureFunction& operator*=(double alpha);
  friend FutureFunction operator+(FutureFunction a, const FutureFunction& b) { return a += b; }
  friend FutureFunction operator-(FutureFunction a, const FutureFunction& b);
  friend FutureFunction operator*(double alpha, FutureFunction g) { return g *= alpha; }

 private:
  void require_same_model(const FutureFunction& other) const;

  std::shared_ptr<const MatrixOom> model_;
  std::vector<Term> terms_;
};

/// sum_c alpha_c * P(bbar | c), summed in term order.
double evaluate(const FutureFunction& g, const Word& bbar);

/// Evaluation at the empty word: sum of coefficients of positive-probability prefixes.
double sigma_functional(const FutureFunction& g);

/// t_a g = sum_c alpha_c P(a | c) g_{ca}; terms with P(ca) = 0 are dropped.
FutureFunction apply_operator_fn(const FutureFunction& g, Symbol a);

/// max over |w| <= depth of |(t_a g)(w) - g(a w)|.
double shift_check(const FutureFunction& g, Symbol a, int depth);

/// max over |w| <= depth (including the empty word) of |g(w)|. A lower bound
/// on the full sup norm; exact for basis functions.
double sup_norm_truncated(const FutureFunction& g, int depth);

/// Greedily keeps candidates (in order) whose addition leaves the truncated
/// Gram matrix at depth `depth` with smallest eigenvalue > `tol`.
/// Zero-probability candidates are never selected.
std::vector<Word> basis_select(std::shared_ptr<const MatrixOom> model, const std::vector<Word>& candidates,
                               int depth, double tol, const EnumerationOptions& options = {});

}  // namespace oom
