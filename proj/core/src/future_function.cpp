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

#include "oom/future_function.hpp"

#include <algorithm>
#include <cmath>

#include "oom/embedding.hpp"
#include "oom/errors.hpp"

namespace oom {

FutureFunction::FutureFunction(std::shared_ptr<const MatrixOom> model) : model_(std::move(model)) {
  if (!model_) throw InvalidArgument("future function needs a model");
}

FutureFunction FutureFunction::zero(std::shared_ptr<const MatrixOom> model) {
  return FutureFunction(std::move(model));
}

FutureFunction FutureFunction::basis(std::shared_ptr<const MatrixOom> model, Word prefix) {
  FutureFunction g(std::move(model));
  g.add_term(prefix, 1.0);
  return g;
}

FutureFunction& FutureFunction::add_term(const Word& prefix, double alpha) {
  model_->alphabet().check(prefix);
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.prefix == prefix; });
  if (it != terms_.end())
    it->coefficient += alpha;
  else
    terms_.push_back(Term{prefix, alpha});
  return *this;
}

FutureFunction& FutureFunction::prune_zeros() {
  std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0.0; });
  return *this;
}

Vector FutureFunction::state() const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(model_->dim()));
  for (const auto& t : terms_) {
    const double p = string_probability(*model_, t.prefix);
    if (p == 0.0) continue;
    v += (t.coefficient / p) * model_->apply(t.prefix, model_->w_eps());
  }
  return v;
}

void FutureFunction::require_same_model(const FutureFunction& other) const {
  if (model_ != other.model_) throw InvalidArgument("future functions belong to different models");
}

FutureFunction& FutureFunction::operator+=(const FutureFunction& other) {
  require_same_model(other);
  for (const auto& t : other.terms_) add_term(t.prefix, t.coefficient);
  return *this;
}

FutureFunction& FutureFunction::operator*=(double alpha) {
  for (auto& t : terms_) t.coefficient *= alpha;
  return *this;
}

FutureFunction operator-(FutureFunction a, const FutureFunction& b) {
  a.require_same_model(b);
  for (const auto& t : b.terms_) a.add_term(t.prefix, -t.coefficient);
  return a;
}

double evaluate(const FutureFunction& g, const Word& bbar) {
  g.model().alphabet().check(bbar);
  double total = 0.0;
  for (const auto& t : g.terms()) total += t.coefficient * conditional_probability(g.model(), bbar, t.prefix);
  return total;
}

double sigma_functional(const FutureFunction& g) { return evaluate(g, Word{}); }

FutureFunction apply_operator_fn(const FutureFunction& g, Symbol a) {
  const auto& m = g.model();
  m.alphabet().check(Word{a});
  FutureFunction out(g.model_ptr());
  for (const auto& t : g.terms()) {
    Word extended = t.prefix;
    extended.push_back(a);
    if (string_probability(m, extended) == 0.0) continue;
    out.add_term(extended, t.coefficient * conditional_probability(m, Word{a}, t.prefix));
  }
  return out;
}

namespace {

template <class Visit>
void for_each_word_up_to(const Alphabet& alphabet, int depth, Visit&& visit) {
  for (int len = 0; len <= depth; ++len)
    for (const auto& w : alphabet.words_of_length(static_cast<std::size_t>(len))) visit(w);
}

}  // namespace

double shift_check(const FutureFunction& g, Symbol a, int depth) {
  if (depth < 0) throw InvalidArgument("shift_check depth must be non-negative");
  const auto shifted = apply_operator_fn(g, a);
  double worst = 0.0;
  for_each_word_up_to(g.model().alphabet(), depth, [&](const Word& w) {
    Word aw{a};
    aw.insert(aw.end(), w.begin(), w.end());
    worst = std::max(worst, std::abs(evaluate(shifted, w) - evaluate(g, aw)));
  });
  return worst;
}

double sup_norm_truncated(const FutureFunction& g, int depth) {
  if (depth < 0) throw InvalidArgument("sup norm depth must be non-negative");
  double sup = 0.0;
  for_each_word_up_to(g.model().alphabet(), depth, [&](const Word& w) { sup = std::max(sup, std::abs(evaluate(g, w))); });
  return sup;
}

std::vector<Word> basis_select(std::shared_ptr<const MatrixOom> model, const std::vector<Word>& candidates,
                               int depth, double tol, const EnumerationOptions& options) {
  std::vector<Word> selected;
  for (const auto& c : candidates) {
    if (string_probability(*model, c) == 0.0) continue;
    if (std::find(selected.begin(), selected.end(), c) != selected.end()) continue;
    auto trial = selected;
    trial.push_back(c);
    const auto gram = gram_matrix(model, trial, depth, kDefaultRankTolerance, options);
    if (gram.eigenvalues.front() > tol) selected = std::move(trial);
  }
  return selected;
}

}  // namespace oom
