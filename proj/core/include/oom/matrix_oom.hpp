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

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oom/alphabet.hpp"

namespace oom {

using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Matrix = Eigen::MatrixXd;

/// Magnitude below which a negative string probability is treated as
/// rounding noise and clamped to zero.
inline constexpr double kNegativityTolerance = 1e-9;

/// Matrix representation of an observable operator model.
///
/// One m x m operator per symbol, an evaluation row functional `sigma` and
/// an initial state `w_eps`. The probability of a word a1..an is
/// sigma * tau[an] * ... * tau[a1] * w_eps, so the first symbol is applied
/// first. Construction only checks shapes and finiteness; use validate() for
/// the probabilistic invariants.
class MatrixOom {
 public:
  MatrixOom(Alphabet alphabet, std::vector<Matrix> tau, RowVector sigma, Vector w_eps);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t dim() const { return static_cast<std::size_t>(w_eps_.size()); }
  const Matrix& tau(Symbol a) const { return tau_.at(a.index); }
  const std::vector<Matrix>& operators() const { return tau_; }
  const RowVector& sigma() const { return sigma_; }
  const Vector& w_eps() const { return w_eps_; }

  /// Returns tau[a] * w. No normalization.
  Vector apply(Symbol a, const Vector& w) const;
  /// Applies the operators of `word` to `w`, first symbol first.
  Vector apply(const Word& word, const Vector& w) const;
  /// sigma * w.
  double evaluate(const Vector& w) const { return sigma_.dot(w); }

 private:
  Alphabet alphabet_;
  std::vector<Matrix> tau_;
  RowVector sigma_;
  Vector w_eps_;
};

/// sigma * tau_{an} ... tau_{a1} * w_eps; 1 for the empty word. Values in
/// [-kNegativityTolerance, 0) are clamped to 0; anything more negative
/// throws InvalidModel.
double string_probability(const MatrixOom& m, const Word& word);

/// P(bbar | abar) = P(abar bbar) / P(abar), or 0 when P(abar) = 0.
double conditional_probability(const MatrixOom& m, const Word& bbar, const Word& abar);

/// tau_a * w for a symbol given by name. Throws UnknownSymbol.
Vector apply_observable(const MatrixOom& m, std::string_view symbol, const Vector& w);

/// tau_{bk} ... tau_{b1}; identity for the empty word.
Matrix composite_operator(const MatrixOom& m, const Word& bbar);

/// Draws `length` symbols from the process defined by `m`, deterministically
/// for a fixed seed. Throws InvalidModel if the running state loses positive
/// mass.
Word sample_sequence(const MatrixOom& m, std::size_t length, std::uint64_t seed);

struct ValidationTolerances {
  double negativity = kNegativityTolerance;
  double level_sum = 1e-10;
  double stationarity = 1e-10;
  double normalization = 1e-10;
};

struct ValidationReport {
  int depth = 0;
  /// Magnitude of the most negative string probability found (0 if none).
  double max_negativity = 0.0;
  /// max_k |sum_{|w|=k} P(w) - 1| over 1 <= k <= depth.
  double max_level_sum_deviation = 0.0;
  /// max-norm of (sum_a tau_a) w_eps - w_eps.
  double stationarity_residual = 0.0;
  /// |sigma * w_eps - 1|.
  double normalization_residual = 0.0;
  bool negativity_ok = false;
  bool level_sums_ok = false;
  bool stationarity_ok = false;
  bool normalization_ok = false;

  bool passed() const { return negativity_ok && level_sums_ok && stationarity_ok && normalization_ok; }
};

inline constexpr int kDefaultValidationDepth = 8;

/// Exhaustively checks every word up to `depth`. Failures are reported, not
/// thrown. Throws InvalidArgument for depth < 1 and BudgetExceeded if the
/// number of words exceeds `node_budget`.
ValidationReport validate(const MatrixOom& m, int depth = kDefaultValidationDepth,
                          const ValidationTolerances& tol = {},
                          std::uint64_t node_budget = 10'000'000);

}  // namespace oom
