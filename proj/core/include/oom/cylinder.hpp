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

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oom/alphabet.hpp"
#include "oom/matrix_oom.hpp"

namespace oom {

/// Homogeneous cylinder union: the set of right-infinite sequences whose
/// first `level` symbols form one of `strings`. Level 0 with {eps} is the
/// full space; any level with no strings is the empty set.
class CylinderSet {
 public:
  CylinderSet() = default;
  /// Throws InvalidArgument unless every string has length `level`.
  CylinderSet(std::size_t level, std::set<Word> strings);

  std::size_t level() const { return level_; }
  const std::set<Word>& strings() const { return strings_; }
  bool empty() const { return strings_.empty(); }

  /// Representation equality (same level, same strings). Use
  /// CylinderAlgebra::equal for set equality.
  bool operator==(const CylinderSet&) const = default;

 private:
  std::size_t level_ = 0;
  std::set<Word> strings_;
};

inline constexpr std::size_t kDefaultLiftBudget = 1'000'000;

/// Boolean algebra of homogeneous cylinder unions over a finite alphabet.
///
/// Binary operations lift both operands to the larger level first. Lifts
/// that would materialize more than `lift_budget` strings throw
/// BudgetExceeded.
class CylinderAlgebra {
 public:
  explicit CylinderAlgebra(Alphabet alphabet, std::size_t lift_budget = kDefaultLiftBudget);

  const Alphabet& alphabet() const { return alphabet_; }

  CylinderSet full() const;
  CylinderSet empty(std::size_t level = 0) const;
  /// E(word).
  CylinderSet cylinder(const Word& word) const;

  /// Same subset of sequences, written at level k >= c.level().
  CylinderSet lift(const CylinderSet& c, std::size_t k) const;
  CylinderSet complement(const CylinderSet& c) const;
  CylinderSet intersect(const CylinderSet& c1, const CylinderSet& c2) const;
  CylinderSet unite(const CylinderSet& c1, const CylinderSet& c2) const;

  /// Set equality: equal strings after lifting to the larger level.
  bool equal(const CylinderSet& c1, const CylinderSet& c2) const;
  bool subset(const CylinderSet& c1, const CylinderSet& c2) const;
  bool disjoint(const CylinderSet& c1, const CylinderSet& c2) const;

  /// Textual form "k:s1,s2,..." (e.g. "2:aa,ab", "0:eps", "3:").
  CylinderSet parse(std::string_view text) const;
  std::string format(const CylinderSet& c) const;

 private:
  void check(const CylinderSet& c) const;

  Alphabet alphabet_;
  std::size_t lift_budget_;
};

/// Pre-measure mu_abar(c) = sum over c's strings b of P(b | abar).
/// 0 for the empty set; the zero measure when P(abar) = 0.
double premeasure(const MatrixOom& m, const Word& abar, const CylinderSet& c);

/// |mu(union of parts) - sum mu(part)|. Throws InvalidArgument if two parts
/// intersect.
double additivity_check(const CylinderAlgebra& algebra, const MatrixOom& m, const Word& abar,
                        const std::vector<CylinderSet>& parts);

/// premeasure(eps, c) / P(abar) - premeasure(abar, c), which is >= 0 for
/// a valid model. Throws ZeroProbability if P(abar) = 0.
double majorization_check(const MatrixOom& m, const Word& abar, const CylinderSet& c);

}  // namespace oom
