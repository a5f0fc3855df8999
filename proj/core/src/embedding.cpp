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

#include "oom/embedding.hpp"

#include <Eigen/Eigenvalues>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "oom/errors.hpp"

namespace oom {

namespace {

void require_same_model(const FutureFunction& g1, const FutureFunction& g2) {
  if (&g1.model() != &g2.model()) throw InvalidArgument("future functions belong to different models");
}

// Conditional states tau_c w_eps / P(c) for every positive-probability term,
// paired with the term coefficients.
struct Seeds {
  std::vector<Vector> states;
  std::vector<double> coefficients;
};

void append_seeds(const FutureFunction& g, Seeds& seeds) {
  const auto& m = g.model();
  for (const auto& t : g.terms()) {
    const double p = string_probability(m, t.prefix);
    if (p == 0.0) continue;
    seeds.states.push_back(m.apply(t.prefix, m.w_eps()) / p);
    seeds.coefficients.push_back(t.coefficient);
  }
}

double combine(std::span<const Vector> states, std::span<const double> coefficients, const RowVector& sigma) {
  double value = 0.0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) value += coefficients[i] * sigma.dot(states[i]);
  return value;
}

}  // namespace

double density_estimate(const FutureFunction& g, const Word& prefix) {
  const double p = string_probability(g.model(), prefix);
  if (p == 0.0)
    throw ZeroProbability("density is undefined on zero-probability prefix '" + g.model().alphabet().format(prefix) +
                          "'");
  return evaluate(g, prefix) / p;
}

double inner_product_truncated(const FutureFunction& g1, const FutureFunction& g2, int n,
                               const EnumerationOptions& options) {
  require_same_model(g1, g2);
  if (n < 1) throw InvalidArgument("truncation depth must be at least 1");
  Seeds seeds;
  append_seeds(g1, seeds);
  const std::size_t split = seeds.states.size();
  append_seeds(g2, seeds);
  const auto& sigma = g1.model().sigma();
  const std::span<const double> c1(seeds.coefficients.data(), split);
  const std::span<const double> c2(seeds.coefficients.data() + split, seeds.coefficients.size() - split);
  return sum_over_level(
      g1.model(), seeds.states, n,
      [&](std::span<const Vector> states, double p) {
        const double v1 = combine(states.first(split), c1, sigma);
        const double v2 = combine(states.subspan(split), c2, sigma);
        return v1 * v2 / p;
      },
      options);
}

double inner_product_operator_form(const MatrixOom& m, const Word& cbar, const Word& dbar, int n,
                                   const EnumerationOptions& options) {
  if (n < 1) throw InvalidArgument("truncation depth must be at least 1");
  const Matrix tc = composite_operator(m, cbar);
  const Matrix td = composite_operator(m, dbar);
  const double pc = m.evaluate(tc * m.w_eps());
  const double pd = m.evaluate(td * m.w_eps());
  if (!(pc > 0.0)) throw ZeroProbability("operator-form inner product needs P(" + m.alphabet().format(cbar) + ") > 0");
  if (!(pd > 0.0)) throw ZeroProbability("operator-form inner product needs P(" + m.alphabet().format(dbar) + ") > 0");
  const std::vector<Vector> seeds{tc * m.w_eps(), td * m.w_eps()};
  const double sum = sum_over_level(
      m, seeds, n,
      [&](std::span<const Vector> states, double p) { return m.evaluate(states[0]) * m.evaluate(states[1]) / p; },
      options);
  return sum / (pc * pd);
}

ConvergenceReport inner_product_converged(const FutureFunction& g1, const FutureFunction& g2, double tol,
                                          int max_depth, int window, const EnumerationOptions& options) {
  if (!(tol > 0.0)) throw InvalidArgument("stabilization tolerance must be positive");
  if (window < 2 || max_depth < window) throw InvalidArgument("need max_depth >= window >= 2");
  ConvergenceReport report;
  report.window = window;
  report.tolerance = tol;
  for (int n = 1; n <= max_depth; ++n) {
    report.values.push_back(inner_product_truncated(g1, g2, n, options));
    report.depth_reached = n;
    if (n < window) continue;
    double delta = 0.0;
    for (int k = n - window + 1; k < n; ++k)
      delta = std::max(delta, std::abs(report.values[static_cast<std::size_t>(k)] -
                                       report.values[static_cast<std::size_t>(k) - 1]));
    report.tail_delta = delta;
    if (delta < tol) {
      report.stabilized = true;
      break;
    }
  }
  return report;
}

double norm2_truncated(const FutureFunction& g, int n, const EnumerationOptions& options) {
  return std::sqrt(std::max(0.0, inner_product_truncated(g, g, n, options)));
}

double contraction_check(const FutureFunction& g, Symbol a, int n, const EnumerationOptions& options) {
  if (n < 1) throw InvalidArgument("truncation depth must be at least 1");
  const auto shifted = apply_operator_fn(g, a);
  return inner_product_truncated(g, g, n + 1, options) - inner_product_truncated(shifted, shifted, n, options);
}

GramMatrix gram_matrix(std::shared_ptr<const MatrixOom> model, const std::vector<Word>& prefixes, int n,
                       double rank_tol, const EnumerationOptions& options) {
  if (n < 1) throw InvalidArgument("truncation depth must be at least 1");
  std::vector<FutureFunction> basis;
  for (const auto& c : prefixes) {
    if (string_probability(*model, c) == 0.0)
      throw ZeroProbability("Gram prefix '" + model->alphabet().format(c) + "' has probability 0");
    basis.push_back(FutureFunction::basis(model, c));
  }
  GramMatrix gram;
  gram.prefixes = prefixes;
  gram.depth = n;
  gram.rank_tolerance = rank_tol;
  const auto k = static_cast<Eigen::Index>(prefixes.size());
  gram.entries = Matrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) {
      const double v = inner_product_truncated(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)],
                                               n, options);
      gram.entries(i, j) = v;
      gram.entries(j, i) = v;
    }
  if (k == 0) return gram;
  const Matrix symmetric = 0.5 * (gram.entries + gram.entries.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  gram.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  const double largest = gram.eigenvalues.back();
  if (largest > 0.0)
    for (double e : gram.eigenvalues) gram.numerical_rank += e > rank_tol * largest ? 1 : 0;
  return gram;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const ConvergenceReport& report) {
  out << "depth,value\n";
  for (std::size_t i = 0; i < report.values.size(); ++i) out << (i + 1) << ',' << format_double(report.values[i]) << '\n';
}

void write_csv(std::ostream& out, const GramMatrix& gram, const Alphabet& alphabet) {
  for (std::size_t i = 0; i < gram.prefixes.size(); ++i) out << (i ? "," : "") << alphabet.format(gram.prefixes[i]);
  out << '\n';
  for (Eigen::Index i = 0; i < gram.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.entries.cols(); ++j) out << (j ? "," : "") << format_double(gram.entries(i, j));
    out << '\n';
  }
}

}  // namespace oom
