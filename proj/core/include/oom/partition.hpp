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
#include <map>
#include <set>
#include <vector>

#include "oom/cylinder.hpp"

namespace oom {

using FiniteSet = std::set<std::int64_t>;

/// Index bookkeeping for two compatible partitions {A_i} and {B_j}.
///
/// `i0` holds every i with A_i containing some B_j, and `j_of[i]` the B
/// blocks that tile A_i. `j0` holds every j with B_j strictly containing
/// some A_i, and `i_of[j]` the A blocks that tile B_j. {i0} together with
/// the i_of sets partitions the A indices; {j0} with the j_of sets
/// partitions the B indices.
struct PartitionRefinement {
  std::vector<std::size_t> i0;
  std::vector<std::size_t> j0;
  std::map<std::size_t, std::vector<std::size_t>> j_of;
  std::map<std::size_t, std::vector<std::size_t>> i_of;
};

/// Both arguments must partition the same ground set into non-empty blocks,
/// and every pair (A_i, B_j) must be disjoint or nested. Throws
/// InvalidArgument otherwise, naming the offending block or pair.
PartitionRefinement partition_refine(const std::vector<FiniteSet>& a, const std::vector<FiniteSet>& b);

/// partition_refine on two cylinder partitions of the same set, after
/// lifting every block to a common level.
PartitionRefinement refine_cylinder_partitions(const CylinderAlgebra& algebra, const std::vector<CylinderSet>& a,
                                               const std::vector<CylinderSet>& b);

}  // namespace oom
