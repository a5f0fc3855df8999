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

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "oom/partition.hpp"

namespace oom::testing {

/// Checks the two partition properties and the two tiling identities by
/// explicit set reconstruction.
inline bool reconstructs(const PartitionRefinement& r, const std::vector<FiniteSet>& a,
                         const std::vector<FiniteSet>& b) {
  // {i0} and the i_of sets partition the A indices.
  std::vector<int> seen_i(a.size(), 0), seen_j(b.size(), 0);
  for (auto i : r.i0) ++seen_i.at(i);
  for (const auto& [j, is] : r.i_of) {
    if (std::find(r.j0.begin(), r.j0.end(), j) == r.j0.end()) return false;
    for (auto i : is) ++seen_i.at(i);
  }
  for (auto j : r.j0) ++seen_j.at(j);
  for (const auto& [i, js] : r.j_of) {
    if (std::find(r.i0.begin(), r.i0.end(), i) == r.i0.end()) return false;
    for (auto j : js) ++seen_j.at(j);
  }
  if (std::any_of(seen_i.begin(), seen_i.end(), [](int c) { return c != 1; })) return false;
  if (std::any_of(seen_j.begin(), seen_j.end(), [](int c) { return c != 1; })) return false;
  if (r.j_of.size() != r.i0.size() || r.i_of.size() != r.j0.size()) return false;

  for (const auto& [i, js] : r.j_of) {
    FiniteSet joined;
    for (auto j : js) joined.insert(b[j].begin(), b[j].end());
    if (joined != a[i]) return false;
  }
  for (const auto& [j, is] : r.i_of) {
    FiniteSet joined;
    for (auto i : is) joined.insert(a[i].begin(), a[i].end());
    if (joined != b[j]) return false;
  }
  return true;
}

inline std::vector<FiniteSet> split_randomly(std::mt19937_64& rng, const std::vector<std::int64_t>& block) {
  std::uniform_int_distribution<std::size_t> parts_dist(1, block.size());
  const auto parts = parts_dist(rng);
  std::vector<FiniteSet> out(parts);
  // Every part gets one element first so none is empty.
  auto shuffled = block;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::uniform_int_distribution<std::size_t> pick(0, parts - 1);
  for (std::size_t k = 0; k < shuffled.size(); ++k) out[k < parts ? k : pick(rng)].insert(shuffled[k]);
  return out;
}

/// A and B built from a random coarse partition: each coarse block stays
/// whole on one side and is split at random on the other (or kept identical).
inline std::pair<std::vector<FiniteSet>, std::vector<FiniteSet>> random_compatible_pair(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size_dist(1, 24);
  const int n = size_dist(rng);
  std::vector<std::int64_t> ground(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ground[static_cast<std::size_t>(i)] = 3 * i + 1;
  std::vector<FiniteSet> a, b;
  for (const auto& coarse : split_randomly(rng, ground)) {
    const std::vector<std::int64_t> block(coarse.begin(), coarse.end());
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: {
        a.push_back(coarse);
        for (auto& s : split_randomly(rng, block)) b.push_back(std::move(s));
        break;
      }
      case 1: {
        b.push_back(coarse);
        for (auto& s : split_randomly(rng, block)) a.push_back(std::move(s));
        break;
      }
      default:
        a.push_back(coarse);
        b.push_back(coarse);
    }
  }
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  return {a, b};
}

/// A compatible pair with one crossing introduced: two elements from
/// different B blocks that share an A block are swapped between B blocks
/// in a way that makes some (A_i, B_j) overlap without nesting. Returns
/// false if the pair is too small to produce a crossing.
inline bool make_crossing(std::mt19937_64& rng, std::vector<FiniteSet>& a, std::vector<FiniteSet>& b) {
  // Merge everything into a chain of two-element blocks offset by one:
  // A = {x0,x1},{x2,x3},...  B = {x1,x2},{x3,x4},... plus end blocks.
  FiniteSet ground;
  for (const auto& s : a) ground.insert(s.begin(), s.end());
  if (ground.size() < 3) return false;
  std::vector<std::int64_t> xs(ground.begin(), ground.end());
  std::shuffle(xs.begin(), xs.end(), rng);
  a.clear();
  b.clear();
  for (std::size_t k = 0; k < xs.size(); k += 2) {
    FiniteSet s{xs[k]};
    if (k + 1 < xs.size()) s.insert(xs[k + 1]);
    a.push_back(s);
  }
  b.push_back({xs[0]});
  for (std::size_t k = 1; k < xs.size(); k += 2) {
    FiniteSet s{xs[k]};
    if (k + 1 < xs.size()) s.insert(xs[k + 1]);
    b.push_back(s);
  }
  return true;
}

}  // namespace oom::testing
