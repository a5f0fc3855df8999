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

#include <cstdint>
#include <functional>
#include <span>

#include "oom/matrix_oom.hpp"

namespace oom {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct EnumerationOptions {
  /// Maximum number of prefix-tree nodes a single enumeration may visit.
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Fan the walk out over first symbols. Results agree with the serial walk
  /// to rounding; the serial walk is the reference.
  bool parallel = false;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Per-leaf summand. `states[i]` is tau_w * seeds[i] for the current leaf
/// word w, `probability` is P(w) > 0.
using LevelTerm = std::function<double(std::span<const Vector> states, double probability)>;

/// Sums `term` over every word of length `level` with positive probability,
/// walking the prefix tree depth-first in lexicographic order and pruning
/// subtrees whose prefix has probability 0. Throws BudgetExceeded when more
/// than `options.node_budget` nodes would be visited.
double sum_over_level(const MatrixOom& m, std::span<const Vector> seeds, int level,
                      const LevelTerm& term, const EnumerationOptions& options = {});

/// Number of prefix-tree nodes (excluding the root) of a full tree of the
/// given depth, saturating at UINT64_MAX.
std::uint64_t full_tree_nodes(std::size_t alphabet_size, int depth);

}  // namespace oom
