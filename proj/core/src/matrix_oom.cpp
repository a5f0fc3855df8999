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

#include "oom/matrix_oom.hpp"

#include <cmath>
#include <random>
#include <string>

#include "oom/enumeration.hpp"
#include "oom/errors.hpp"

namespace oom {

MatrixOom::MatrixOom(Alphabet alphabet, std::vector<Matrix> tau, RowVector sigma, Vector w_eps)
    : alphabet_(std::move(alphabet)), tau_(std::move(tau)), sigma_(std::move(sigma)), w_eps_(std::move(w_eps)) {
  const auto m = w_eps_.size();
  if (m == 0) throw InvalidModel("OOM dimension must be positive");
  if (sigma_.size() != m)
    throw InvalidModel("sigma has length " + std::to_string(sigma_.size()) + ", expected " + std::to_string(m));
  if (tau_.size() != alphabet_.size())
    throw InvalidModel("expected one operator per symbol (" + std::to_string(alphabet_.size()) + "), got " +
                       std::to_string(tau_.size()));
  for (std::size_t i = 0; i < tau_.size(); ++i) {
    const auto& t = tau_[i];
    if (t.rows() != m || t.cols() != m)
      throw InvalidModel("operator for '" + alphabet_.symbols()[i] + "' is " + std::to_string(t.rows()) + "x" +
                         std::to_string(t.cols()) + ", expected " + std::to_string(m) + "x" + std::to_string(m));
    if (!t.allFinite()) throw InvalidModel("operator for '" + alphabet_.symbols()[i] + "' has non-finite entries");
  }
  if (!sigma_.allFinite() || !w_eps_.allFinite()) throw InvalidModel("sigma/w_eps contain non-finite entries");
}

Vector MatrixOom::apply(Symbol a, const Vector& w) const {
  if (a.index >= tau_.size()) throw UnknownSymbol("symbol index " + std::to_string(a.index) + " out of range");
  if (static_cast<std::size_t>(w.size()) != dim())
    throw InvalidArgument("state vector has length " + std::to_string(w.size()) + ", expected " +
                          std::to_string(dim()));
  return tau_[a.index] * w;
}

Vector MatrixOom::apply(const Word& word, const Vector& w) const {
  alphabet_.check(word);
  Vector v = w;
  for (auto a : word) v = apply(a, v);
  return v;
}

namespace {

double clamp_probability(double p, const Word& word, const Alphabet& alphabet) {
  if (p >= 0.0) return p;
  if (p >= -kNegativityTolerance) return 0.0;
  throw InvalidModel("negative probability " + std::to_string(p) + " for word '" + alphabet.format(word) +
                     "': not a valid OOM");
}

}  // namespace

double string_probability(const MatrixOom& m, const Word& word) {
  if (word.empty()) return 1.0;
  return clamp_probability(m.evaluate(m.apply(word, m.w_eps())), word, m.alphabet());
}

double conditional_probability(const MatrixOom& m, const Word& bbar, const Word& abar) {
  m.alphabet().check(bbar);
  const double pa = string_probability(m, abar);
  if (pa == 0.0) return 0.0;
  return string_probability(m, concat(abar, bbar)) / pa;
}

Vector apply_observable(const MatrixOom& m, std::string_view symbol, const Vector& w) {
  return m.apply(m.alphabet().symbol(symbol), w);
}

Matrix composite_operator(const MatrixOom& m, const Word& bbar) {
  m.alphabet().check(bbar);
  Matrix out = Matrix::Identity(static_cast<Eigen::Index>(m.dim()), static_cast<Eigen::Index>(m.dim()));
  for (auto b : bbar) out = m.tau(b) * out;
  return out;
}

Word sample_sequence(const MatrixOom& m, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto k = m.alphabet().size();
  Word out;
  out.reserve(length);
  Vector w = m.w_eps();
  std::vector<Vector> next(k);
  std::vector<double> mass(k);
  for (std::size_t step = 0; step < length; ++step) {
    const double total = m.evaluate(w);
    if (!(total > 0.0))
      throw InvalidModel("sampling reached a state with sigma*w = " + std::to_string(total) + " at step " +
                         std::to_string(step));
    for (std::uint32_t a = 0; a < k; ++a) {
      next[a] = m.tau(Symbol{a}) * w;
      const double p = m.evaluate(next[a]) / total;
      if (p < -kNegativityTolerance)
        throw InvalidModel("negative next-symbol probability " + std::to_string(p) + " while sampling");
      mass[a] = std::max(p, 0.0);
    }
    double u = unit(rng);
    double norm = 0.0;
    for (double p : mass) norm += p;
    u *= norm;
    std::uint32_t pick = 0;
    double cumulative = 0.0;
    for (std::uint32_t a = 0; a < k; ++a) {
      cumulative += mass[a];
      if (mass[a] > 0.0) pick = a;
      if (u < cumulative) break;
    }
    out.push_back(Symbol{pick});
    // Renormalize to keep the state away from underflow; the ratios that
    // drive sampling are scale invariant.
    const double chosen = m.evaluate(next[pick]);
    if (!(chosen > 0.0)) throw InvalidModel("sampled a symbol with non-positive mass");
    w = next[pick] / chosen;
  }
  return out;
}

ValidationReport validate(const MatrixOom& m, int depth, const ValidationTolerances& tol,
                          std::uint64_t node_budget) {
  if (depth < 1) throw InvalidArgument("validation depth must be at least 1");
  const auto k = m.alphabet().size();
  if (full_tree_nodes(k, depth) > node_budget)
    throw BudgetExceeded("validation to depth " + std::to_string(depth) + " over " + std::to_string(k) +
                         " symbols exceeds node budget " + std::to_string(node_budget));

  ValidationReport report;
  report.depth = depth;
  report.normalization_residual = std::abs(m.evaluate(m.w_eps()) - 1.0);

  Vector total = Vector::Zero(static_cast<Eigen::Index>(m.dim()));
  for (const auto& t : m.operators()) total += t * m.w_eps();
  report.stationarity_residual = (total - m.w_eps()).cwiseAbs().maxCoeff();

  // Exhaustive, no pruning: an invalid model may have negative mass below a
  // zero-probability prefix.
  std::vector<CompensatedSum> level_sums(static_cast<std::size_t>(depth) + 1);
  std::vector<Vector> stack(static_cast<std::size_t>(depth) + 1);
  stack[0] = m.w_eps();
  auto visit = [&](auto&& self, int d) -> void {
    for (std::uint32_t a = 0; a < k; ++a) {
      stack[d + 1].noalias() = m.tau(Symbol{a}) * stack[d];
      const double p = m.evaluate(stack[d + 1]);
      if (p < 0.0) report.max_negativity = std::max(report.max_negativity, -p);
      level_sums[d + 1].add(p);
      if (d + 1 < depth) self(self, d + 1);
    }
  };
  visit(visit, 0);
  for (int d = 1; d <= depth; ++d)
    report.max_level_sum_deviation =
        std::max(report.max_level_sum_deviation, std::abs(level_sums[d].value() - 1.0));

  report.negativity_ok = report.max_negativity <= tol.negativity;
  report.level_sums_ok = report.max_level_sum_deviation < tol.level_sum;
  report.stationarity_ok = report.stationarity_residual < tol.stationarity;
  report.normalization_ok = report.normalization_residual < tol.normalization;
  return report;
}

}  // namespace oom
