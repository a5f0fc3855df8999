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

#include "oom/matrix_oom.hpp"

namespace oom {

/// Discrete hidden Markov model with a stationary initial distribution.
///
/// `transition(i, j)` = P(next state j | state i),
/// `emission(i, a)` = P(symbol a | state i). Rows of both are stochastic.
struct Hmm {
  Alphabet alphabet;
  Matrix transition;
  Matrix emission;
  Vector initial;

  std::size_t states() const { return static_cast<std::size_t>(initial.size()); }
};

inline constexpr double kHmmTolerance = 1e-10;

/// Throws InvalidModel naming the first violated invariant and its residual.
void check_hmm(const Hmm& h, double tol = kHmmTolerance);

/// tau_a = transition^T * diag(emission(:, a)), sigma = ones, w_eps = initial.
Matrix hmm_operator(const Hmm& h, Symbol a);
MatrixOom hmm_to_oom(const Hmm& h, double tol = kHmmTolerance);

/// Power-iterates pi <- pi * transition from the uniform distribution until
/// the max-norm step falls below `tol`. Throws InvalidModel if that does not
/// happen within `max_iterations` (e.g. a periodic chain). Periodic chains
/// need their stationary vector supplied explicitly.
Vector stationary_distribution(const Matrix& transition, double tol = 1e-12, int max_iterations = 100000);

}  // namespace oom
