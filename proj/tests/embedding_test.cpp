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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oom/oom.hpp"
#include "support/oracle.hpp"

namespace oom {
namespace {

using testing::shared_oom;

class Embedding : public ::testing::Test {
 protected:
  Hmm sticky_h = testing::sticky_hmm();
  std::shared_ptr<const MatrixOom> sticky = shared_oom(sticky_h);
  std::shared_ptr<const MatrixOom> iid = shared_oom(testing::iid_hmm());
  std::shared_ptr<const MatrixOom> alt = shared_oom(testing::alternating_hmm());
  const Alphabet& ab = sticky->alphabet();
  Word w(const char* t) const { return ab.parse(t); }
  FutureFunction g(const std::shared_ptr<const MatrixOom>& m, const char* prefix) const {
    return FutureFunction::basis(m, ab.parse(prefix));
  }
};

TEST_F(Embedding, DensityExamples) {
  for (const auto& p : testing::positive_words_up_to(*sticky, 4)) {
    if (p.empty()) continue;
    EXPECT_NEAR(density_estimate(g(sticky, "eps"), p), 1.0, 1e-14);
    EXPECT_NEAR(density_estimate(g(iid, "ab"), p), 1.0, 1e-14);
  }
  const double d = density_estimate(g(sticky, "a"), w("a"));
  EXPECT_NEAR(d, 1.8, 1e-14);
  EXPECT_LE(d, 2.0);
  EXPECT_THROW(density_estimate(g(alt, "a"), w("aa")), ZeroProbability);
}

TEST_F(Embedding, InnerProductNormalization) {
  for (const auto& m : {sticky, iid, alt})
    for (int n = 1; n <= 10; ++n) {
      EXPECT_NEAR(inner_product_truncated(g(m, "eps"), g(m, "eps"), n), 1.0, 1e-13);
      for (const auto& p : testing::positive_words_up_to(*m, 2))
        EXPECT_NEAR(inner_product_truncated(FutureFunction::basis(m, p), g(m, "eps"), n), 1.0, 1e-12);
    }
  // Dyadic probabilities make the iid sum exact.
  EXPECT_EQ(inner_product_truncated(g(iid, "eps"), g(iid, "eps"), 9), 1.0);
}

TEST_F(Embedding, InnerProductMatchesPathSumOracle) {
  // Oracle: explicit listing of 2^12 words with hidden-path probabilities.
  const double oracle = testing::path_sum_inner_product(sticky_h, w("a"), w("a"), 12);
  EXPECT_NEAR(inner_product_truncated(g(sticky, "a"), g(sticky, "a"), 12), oracle, 1e-10);
  // Frozen from an independent numpy enumeration: S_n(g_a, g_a) = 1.64 for all n.
  EXPECT_NEAR(oracle, 1.64, 1e-10);
}

TEST_F(Embedding, OperatorFormAgrees) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_NEAR(inner_product_operator_form(*sticky, Word{}, Word{}, n), 1.0, 1e-13);
    EXPECT_NEAR(inner_product_operator_form(*iid, w("a"), w("b"), n), 1.0, 1e-13);
  }
  EXPECT_NEAR(inner_product_operator_form(*sticky, w("a"), w("b"), 12),
              inner_product_truncated(g(sticky, "a"), g(sticky, "b"), 12), 1e-10);
  EXPECT_THROW(inner_product_operator_form(*alt, w("aa"), w("a"), 3), ZeroProbability);
}

TEST_F(Embedding, ConvergenceReports) {
  const auto flat = inner_product_converged(g(sticky, "eps"), g(sticky, "eps"), 1e-8, 10, 3);
  EXPECT_TRUE(flat.stabilized);
  EXPECT_EQ(flat.depth_reached, 3);
  for (double v : flat.values) EXPECT_NEAR(v, 1.0, 1e-14);

  const auto sticky_run = inner_product_converged(g(sticky, "a"), g(sticky, "a"), 1e-8, 20, 3);
  EXPECT_TRUE(sticky_run.stabilized);
  EXPECT_NEAR(sticky_run.values.back(), inner_product_truncated(g(sticky, "a"), g(sticky, "a"), 20), 1e-6);

  const auto alternating = inner_product_converged(g(alt, "a"), g(alt, "a"), 1e-12, 8, 8);
  ASSERT_EQ(alternating.values.size(), 8u);
  for (double v : alternating.values) EXPECT_NEAR(v, 2.0, 1e-14);

  EXPECT_THROW(inner_product_converged(g(sticky, "a"), g(sticky, "a"), 0.0, 5, 3), InvalidArgument);
  EXPECT_THROW(inner_product_converged(g(sticky, "a"), g(sticky, "a"), 1e-8, 2, 3), InvalidArgument);
}

TEST_F(Embedding, NonStabilizingRunIsReported) {
  // Here S_2 - S_1 ~ 7e-8 and S_3 - S_2 ~ 5e-11; hitting max_depth is a
  // report outcome, not an error.
  std::mt19937_64 rng(21);
  const auto m = shared_oom(testing::random_hmm(rng, 3, Alphabet({"a", "b"})));
  const auto gm = FutureFunction::basis(m, m->alphabet().parse("ab"));
  const auto r = inner_product_converged(gm, gm, 1e-15, 3, 2);
  EXPECT_EQ(r.depth_reached, 3);
  EXPECT_EQ(r.values.size(), 3u);
  EXPECT_FALSE(r.stabilized);
}

TEST_F(Embedding, Norms) {
  EXPECT_NEAR(norm2_truncated(g(sticky, "eps"), 5), 1.0, 1e-14);
  EXPECT_EQ(norm2_truncated(FutureFunction::zero(sticky), 5), 0.0);
  double previous = 0.0;
  for (int n = 1; n <= 15; ++n) {
    const double s = inner_product_truncated(g(sticky, "a"), g(sticky, "a"), n);
    EXPECT_GE(s, previous - 1e-10);
    previous = s;
  }
}

TEST_F(Embedding, Contraction) {
  EXPECT_EQ(contraction_check(FutureFunction::zero(sticky), Symbol{0}, 4), 0.0);
  // g_eps on the sticky chain: S_n(t_a g_eps) = sum_w P(a w)^2 / P(w); oracle by listing.
  for (int n = 1; n <= 6; ++n) {
    double shifted = 0.0;
    for (const auto& v : ab.words_of_length(static_cast<std::size_t>(n))) {
      const double paw = testing::path_sum_probability(sticky_h, concat(w("a"), v));
      shifted += paw * paw / testing::path_sum_probability(sticky_h, v);
    }
    const double slack = contraction_check(g(sticky, "eps"), Symbol{0}, n);
    EXPECT_NEAR(slack, 1.0 - shifted, 1e-12);
    EXPECT_GE(slack, 0.0);
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing::random_future(rng, sticky, 2);
    EXPECT_GE(contraction_check(f, Symbol{static_cast<std::uint32_t>(trial % 2)}, 8), -1e-12);
  }
}

TEST_F(Embedding, GramMatrices) {
  const auto iid_gram = gram_matrix(iid, {Word{}, w("a"), w("b")}, 6);
  EXPECT_TRUE(iid_gram.entries.isApprox(Matrix::Ones(3, 3)));
  EXPECT_EQ(iid_gram.numerical_rank, 1);

  const auto single = gram_matrix(sticky, {Word{}}, 7);
  EXPECT_NEAR(single.entries(0, 0), 1.0, 1e-14);
  EXPECT_EQ(single.numerical_rank, 1);

  const auto sticky_gram = gram_matrix(sticky, {Word{}, w("a"), w("b"), w("aa"), w("bb")}, 12, 1e-8);
  EXPECT_EQ(sticky_gram.numerical_rank, 2);
  EXPECT_GE(sticky_gram.eigenvalues.front(), -1e-9);
  EXPECT_TRUE(std::is_sorted(sticky_gram.eigenvalues.begin(), sticky_gram.eigenvalues.end()));
  EXPECT_TRUE(sticky_gram.entries.isApprox(sticky_gram.entries.transpose(), 1e-12));

  EXPECT_THROW(gram_matrix(alt, {w("aa")}, 4), ZeroProbability);
}

TEST_F(Embedding, CsvFormats) {
  ConvergenceReport r;
  r.values = {1.0, 0.1, 1.0 / 3.0};
  std::ostringstream out;
  write_csv(out, r);
  EXPECT_EQ(out.str(), "depth,value\n1,1\n2,0.10000000000000001\n3,0.33333333333333331\n");

  const auto gram = gram_matrix(iid, {Word{}, w("ab")}, 3);
  std::ostringstream gout;
  write_csv(gout, gram, ab);
  EXPECT_EQ(gout.str(), "eps,ab\n1,1\n1,1\n");

  for (double x : {0.1, 1.0 / 3.0, 1.64, 2e-300, -7.25e10}) EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST_F(Embedding, ParallelEnumerationMatchesSerial) {
  std::mt19937_64 rng(33);
  const Alphabet abc({"a", "b", "c"});
  const auto m = shared_oom(testing::random_hmm(rng, 3, abc, 0.2));
  const auto f1 = testing::random_future(rng, m, 2);
  const auto f2 = testing::random_future(rng, m, 2);
  for (int n = 1; n <= 6; ++n)
    EXPECT_NEAR(inner_product_truncated(f1, f2, n), inner_product_truncated(f1, f2, n, {kDefaultNodeBudget, true}),
                1e-12);
}

TEST_F(Embedding, BudgetIsEnforced) {
  EXPECT_THROW(inner_product_truncated(g(sticky, "a"), g(sticky, "a"), 4, {29, false}), BudgetExceeded);
  EXPECT_NO_THROW(inner_product_truncated(g(sticky, "a"), g(sticky, "a"), 4, {30, false}));
}

}  // namespace
}  // namespace oom
