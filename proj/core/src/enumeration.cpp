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

#include "oom/enumeration.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <vector>

#include "oom/errors.hpp"

namespace oom {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    compensation_ += (sum_ - t) + x;
  else
    compensation_ += (x - t) + sum_;
  sum_ = t;
}

std::uint64_t full_tree_nodes(std::size_t alphabet_size, int depth) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (int d = 1; d <= depth; ++d) {
    if (layer > kMax / alphabet_size) return kMax;
    layer *= alphabet_size;
    if (total > kMax - layer) return kMax;
    total += layer;
  }
  return total;
}

namespace {

// Slot 0 of every state list holds tau_w * w_eps; the caller's seeds follow.
class Walker {
 public:
  Walker(const MatrixOom& m, int level, const LevelTerm& term, std::atomic<std::uint64_t>& nodes,
         std::uint64_t budget, std::size_t width)
      : m_(m), level_(level), term_(term), nodes_(nodes), budget_(budget),
        buffers_(static_cast<std::size_t>(level) + 1, std::vector<Vector>(width)) {}

  std::vector<Vector>& root() { return buffers_[0]; }

  void descend(int depth, Symbol a) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
      throw BudgetExceeded("enumeration exceeded node budget of " + std::to_string(budget_) +
                           " at depth " + std::to_string(level_));
    const auto& parent = buffers_[static_cast<std::size_t>(depth) - 1];
    auto& child = buffers_[static_cast<std::size_t>(depth)];
    const Matrix& op = m_.tau(a);
    child[0].noalias() = op * parent[0];
    const double p = m_.evaluate(child[0]);
    if (p < -kNegativityTolerance)
      throw InvalidModel("negative string probability " + std::to_string(p) + " during enumeration");
    if (p <= 0.0) return;
    for (std::size_t i = 1; i < child.size(); ++i) child[i].noalias() = op * parent[i];
    if (depth == level_) {
      sum_.add(term_(std::span<const Vector>(child).subspan(1), p));
      return;
    }
    for (std::uint32_t b = 0; b < m_.alphabet().size(); ++b) descend(depth + 1, Symbol{b});
  }

  void leaf_at_root() {
    const auto& r = buffers_[0];
    const double p = m_.evaluate(r[0]);
    if (p > 0.0) sum_.add(term_(std::span<const Vector>(r).subspan(1), p));
  }

  double value() const { return sum_.value(); }

 private:
  const MatrixOom& m_;
  int level_;
  const LevelTerm& term_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  std::vector<std::vector<Vector>> buffers_;
  CompensatedSum sum_;
};

}  // namespace

double sum_over_level(const MatrixOom& m, std::span<const Vector> seeds, int level,
                      const LevelTerm& term, const EnumerationOptions& options) {
  if (level < 0) throw InvalidArgument("enumeration level must be non-negative");
  for (const auto& s : seeds)
    if (static_cast<std::size_t>(s.size()) != m.dim())
      throw InvalidArgument("seed state has length " + std::to_string(s.size()) + ", expected " +
                            std::to_string(m.dim()));

  const std::size_t width = seeds.size() + 1;
  std::atomic<std::uint64_t> nodes{0};
  auto make_walker = [&] {
    Walker w(m, level, term, nodes, options.node_budget, width);
    w.root()[0] = m.w_eps();
    for (std::size_t i = 0; i < seeds.size(); ++i) w.root()[i + 1] = seeds[i];
    return w;
  };

  if (level == 0) {
    auto w = make_walker();
    w.leaf_at_root();
    return w.value();
  }

  const auto k = static_cast<std::uint32_t>(m.alphabet().size());
  if (!options.parallel || k == 1) {
    auto w = make_walker();
    for (std::uint32_t a = 0; a < k; ++a) w.descend(1, Symbol{a});
    return w.value();
  }

  std::vector<std::future<double>> branches;
  branches.reserve(k);
  for (std::uint32_t a = 0; a < k; ++a) {
    branches.push_back(std::async(std::launch::async, [&, a] {
      auto w = make_walker();
      w.descend(1, Symbol{a});
      return w.value();
    }));
  }
  // Join every branch before rethrowing so no task outlives the call.
  std::vector<double> partial(k, 0.0);
  std::exception_ptr failure;
  for (std::uint32_t a = 0; a < k; ++a) {
    try {
      partial[a] = branches[a].get();
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  CompensatedSum total;
  for (double p : partial) total.add(p);
  return total.value();
}

}  // namespace oom
