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

#include "oom/hmm.hpp"

#include <cmath>
#include <sstream>

#include "oom/errors.hpp"

namespace oom {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

void check_stochastic_rows(const Matrix& p, const char* what, double tol) {
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      const double x = p(i, j);
      if (!std::isfinite(x) || x < 0.0 || x > 1.0)
        throw InvalidModel(std::string(what) + "[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + fmt(x) +
                           " is not a probability");
    }
    const double residual = std::abs(p.row(i).sum() - 1.0);
    if (residual > tol)
      throw InvalidModel(std::string(what) + " row " + std::to_string(i) + " sums to 1 with residual " +
                         fmt(residual));
  }
}

}  // namespace

void check_hmm(const Hmm& h, double tol) {
  const auto m = h.initial.size();
  if (m == 0) throw InvalidModel("HMM must have at least one state");
  if (h.transition.rows() != m || h.transition.cols() != m)
    throw InvalidModel("transition must be " + std::to_string(m) + "x" + std::to_string(m));
  if (h.emission.rows() != m || h.emission.cols() != static_cast<Eigen::Index>(h.alphabet.size()))
    throw InvalidModel("emission must be " + std::to_string(m) + "x" + std::to_string(h.alphabet.size()));
  check_stochastic_rows(h.transition, "transition", tol);
  check_stochastic_rows(h.emission, "emission", tol);
  for (Eigen::Index i = 0; i < m; ++i)
    if (!std::isfinite(h.initial(i)) || h.initial(i) < 0.0 || h.initial(i) > 1.0)
      throw InvalidModel("initial[" + std::to_string(i) + "] is not a probability");
  const double mass = std::abs(h.initial.sum() - 1.0);
  if (mass > tol) throw InvalidModel("initial distribution sums to 1 with residual " + fmt(mass));
  const double stationarity = (h.initial.transpose() * h.transition - h.initial.transpose()).cwiseAbs().maxCoeff();
  if (stationarity > tol)
    throw InvalidModel("initial distribution is not stationary: residual " + fmt(stationarity));
}

Matrix hmm_operator(const Hmm& h, Symbol a) {
  return h.transition.transpose() * h.emission.col(a.index).asDiagonal();
}

MatrixOom hmm_to_oom(const Hmm& h, double tol) {
  check_hmm(h, tol);
  std::vector<Matrix> tau;
  tau.reserve(h.alphabet.size());
  for (std::uint32_t a = 0; a < h.alphabet.size(); ++a) tau.push_back(hmm_operator(h, Symbol{a}));
  return MatrixOom(h.alphabet, std::move(tau), RowVector::Ones(h.initial.size()), h.initial);
}

Vector stationary_distribution(const Matrix& transition, double tol, int max_iterations) {
  const auto m = transition.rows();
  if (m == 0 || transition.cols() != m) throw InvalidArgument("transition must be square and non-empty");
  RowVector pi = RowVector::Constant(m, 1.0 / static_cast<double>(m));
  for (int it = 0; it < max_iterations; ++it) {
    RowVector next = pi * transition;
    next /= next.sum();
    const double step = (next - pi).cwiseAbs().maxCoeff();
    pi = next;
    if (step < tol) return pi.transpose();
  }
  throw InvalidModel("power iteration did not reach a fixed point within " + std::to_string(max_iterations) +
                     " iterations");
}

}  // namespace oom
