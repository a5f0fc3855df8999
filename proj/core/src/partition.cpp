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

#include "oom/partition.hpp"

#include <algorithm>
#include <string>

#include "oom/errors.hpp"

namespace oom {

namespace {

enum class Relation { kDisjoint, kContains, kStrictlyInside, kCrossing };

// Relation of A to B.
Relation relate(const FiniteSet& a, const FiniteSet& b) {
  std::size_t common = 0;
  for (auto x : a) common += b.count(x);
  if (common == 0) return Relation::kDisjoint;
  if (common == b.size()) return Relation::kContains;
  if (common == a.size()) return Relation::kStrictlyInside;
  return Relation::kCrossing;
}

FiniteSet check_partition(const std::vector<FiniteSet>& blocks, const char* name) {
  FiniteSet ground;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw InvalidArgument(std::string(name) + "[" + std::to_string(i) + "] is empty");
    for (auto x : blocks[i])
      if (!ground.insert(x).second)
        throw InvalidArgument(std::string(name) + " blocks overlap at element " + std::to_string(x));
  }
  return ground;
}

}  // namespace

PartitionRefinement partition_refine(const std::vector<FiniteSet>& a, const std::vector<FiniteSet>& b) {
  if (check_partition(a, "A") != check_partition(b, "B"))
    throw InvalidArgument("A and B do not partition the same ground set");

  std::vector<std::vector<Relation>> rel(a.size(), std::vector<Relation>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      rel[i][j] = relate(a[i], b[j]);
      if (rel[i][j] == Relation::kCrossing)
        throw InvalidArgument("A[" + std::to_string(i) + "] and B[" + std::to_string(j) +
                              "] intersect without one containing the other");
    }

  PartitionRefinement out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool contains_some = false;
    for (std::size_t j = 0; j < b.size(); ++j) contains_some = contains_some || rel[i][j] == Relation::kContains;
    if (!contains_some) continue;
    out.i0.push_back(i);
    auto& tiles = out.j_of[i];
    for (std::size_t j = 0; j < b.size(); ++j)
      if (rel[i][j] != Relation::kDisjoint) tiles.push_back(j);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    bool strictly_holds_some = false;
    for (std::size_t i = 0; i < a.size(); ++i)
      strictly_holds_some = strictly_holds_some || rel[i][j] == Relation::kStrictlyInside;
    if (!strictly_holds_some) continue;
    out.j0.push_back(j);
    auto& tiles = out.i_of[j];
    for (std::size_t i = 0; i < a.size(); ++i)
      if (rel[i][j] != Relation::kDisjoint) tiles.push_back(i);
  }
  return out;
}

PartitionRefinement refine_cylinder_partitions(const CylinderAlgebra& algebra, const std::vector<CylinderSet>& a,
                                               const std::vector<CylinderSet>& b) {
  std::size_t level = 0;
  for (const auto& c : a) level = std::max(level, c.level());
  for (const auto& c : b) level = std::max(level, c.level());

  std::map<Word, std::int64_t> ids;
  auto to_sets = [&](const std::vector<CylinderSet>& family) {
    std::vector<FiniteSet> out;
    for (const auto& c : family) {
      FiniteSet s;
      const auto lifted = algebra.lift(c, level);
      for (const auto& w : lifted.strings())
        s.insert(ids.emplace(w, static_cast<std::int64_t>(ids.size())).first->second);
      out.push_back(std::move(s));
    }
    return out;
  };
  const auto sa = to_sets(a);
  const auto sb = to_sets(b);
  return partition_refine(sa, sb);
}

}  // namespace oom
