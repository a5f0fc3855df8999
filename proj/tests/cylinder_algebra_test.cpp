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

#include "oom/oom.hpp"
#include "support/oracle.hpp"

namespace oom {
namespace {

class Cylinders : public ::testing::Test {
 protected:
  Alphabet ab{std::vector<std::string>{"a", "b"}};
  CylinderAlgebra alg{ab};
  MatrixOom sticky = hmm_to_oom(testing::sticky_hmm());
  MatrixOom iid = hmm_to_oom(testing::iid_hmm());
  MatrixOom alt = hmm_to_oom(testing::alternating_hmm());

  CylinderSet E(const char* w) const { return alg.cylinder(ab.parse(w)); }
  CylinderSet S(const char* text) const { return alg.parse(text); }

  CylinderSet random_set(std::mt19937_64& rng, std::size_t max_level) const {
    std::uniform_int_distribution<std::size_t> level(0, max_level);
    std::bernoulli_distribution keep(0.5);
    const auto k = level(rng);
    std::set<Word> strings;
    for (auto& w : ab.words_of_length(k))
      if (keep(rng)) strings.insert(std::move(w));
    return CylinderSet(k, std::move(strings));
  }
};

TEST_F(Cylinders, ConstructionChecksHomogeneity) {
  EXPECT_THROW(CylinderSet(2, {ab.parse("a")}), InvalidArgument);
  EXPECT_TRUE(alg.full().strings().contains(Word{}));
  EXPECT_TRUE(alg.empty(3).empty());
}

TEST_F(Cylinders, Lift) {
  EXPECT_EQ(alg.lift(E("a"), 2), S("2:aa,ab"));
  EXPECT_EQ(alg.lift(alg.full(), 1), S("1:a,b"));
  EXPECT_EQ(alg.lift(alg.empty(1), 3), alg.empty(3));
  EXPECT_THROW(alg.lift(E("ab"), 1), InvalidArgument);
}

TEST_F(Cylinders, LiftBudget) {
  const CylinderAlgebra small(ab, 100);
  EXPECT_NO_THROW(small.lift(small.full(), 6));
  EXPECT_THROW(small.lift(small.full(), 7), BudgetExceeded);
}

TEST_F(Cylinders, Complement) {
  EXPECT_TRUE(alg.complement(alg.full()).empty());
  EXPECT_EQ(alg.complement(E("a")), E("b"));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto c = random_set(rng, 4);
    EXPECT_EQ(alg.complement(alg.complement(c)), c);
  }
}

TEST_F(Cylinders, Intersect) {
  EXPECT_TRUE(alg.equal(alg.intersect(E("a"), E("ab")), E("ab")));
  EXPECT_TRUE(alg.intersect(E("a"), E("b")).empty());
  const auto c = S("2:ab,ba");
  EXPECT_TRUE(alg.equal(alg.intersect(c, alg.full()), c));
}

TEST_F(Cylinders, Union) {
  EXPECT_TRUE(alg.equal(alg.unite(E("a"), E("b")), alg.full()));
  EXPECT_EQ(alg.unite(E("a"), E("b")), S("1:a,b"));
  const auto c = S("2:ab,ba");
  EXPECT_TRUE(alg.equal(alg.unite(c, alg.empty()), c));
  const auto u = alg.unite(E("aa"), E("a"));
  EXPECT_EQ(u, alg.lift(E("a"), 2));
  // Membership of every level-2 string agrees with E(a).
  for (const auto& w : ab.words_of_length(2))
    EXPECT_EQ(u.strings().contains(w), w[0] == Symbol{0});
}

TEST_F(Cylinders, TextualForm) {
  EXPECT_EQ(alg.format(S("2:ab,aa")), "2:aa,ab");
  EXPECT_EQ(alg.format(alg.full()), "0:eps");
  EXPECT_EQ(alg.format(alg.empty(3)), "3:");
  EXPECT_THROW(S("2:a"), ParseError);
  EXPECT_THROW(S("x:a"), ParseError);
  EXPECT_THROW(S("aa"), ParseError);
  EXPECT_THROW(S("1:z"), UnknownSymbol);
}

TEST_F(Cylinders, BooleanAlgebraLaws) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_set(rng, 4), y = random_set(rng, 4), z = random_set(rng, 4);
    // De Morgan
    EXPECT_TRUE(alg.equal(alg.complement(alg.unite(x, y)), alg.intersect(alg.complement(x), alg.complement(y))));
    EXPECT_TRUE(alg.equal(alg.complement(alg.intersect(x, y)), alg.unite(alg.complement(x), alg.complement(y))));
    // absorption
    EXPECT_TRUE(alg.equal(alg.unite(x, alg.intersect(x, y)), x));
    EXPECT_TRUE(alg.equal(alg.intersect(x, alg.unite(x, y)), x));
    // idempotence
    EXPECT_TRUE(alg.equal(alg.unite(x, x), x));
    EXPECT_TRUE(alg.equal(alg.intersect(x, x), x));
    // distributivity
    EXPECT_TRUE(alg.equal(alg.intersect(x, alg.unite(y, z)), alg.unite(alg.intersect(x, y), alg.intersect(x, z))));
    EXPECT_TRUE(alg.equal(alg.unite(x, alg.complement(x)), alg.full()));
  }
}

TEST_F(Cylinders, PremeasureExamples) {
  for (const auto* m : {&sticky, &iid, &alt})
    for (const auto& a : testing::positive_words_up_to(*m, 3)) EXPECT_NEAR(premeasure(*m, a, alg.full()), 1.0, 1e-14);
  EXPECT_EQ(premeasure(alt, ab.parse("aa"), alg.full()), 0.0);
  EXPECT_EQ(premeasure(sticky, Word{}, alg.empty(2)), 0.0);
  EXPECT_EQ(premeasure(iid, Word{}, E("ab")), 0.25);
  EXPECT_NEAR(premeasure(sticky, Word{}, alg.unite(E("aa"), E("ab"))), 0.5, 1e-15);
}

TEST_F(Cylinders, PremeasureMonotoneAndLiftInvariant) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_set(rng, 3), y = random_set(rng, 3);
    const auto inter = alg.intersect(x, y);
    for (const auto* m : {&sticky, &alt}) {
      for (const auto& a : {Word{}, ab.parse("a"), ab.parse("ba")}) {
        EXPECT_LE(premeasure(*m, a, inter), premeasure(*m, a, x) + 1e-12);
        EXPECT_NEAR(premeasure(*m, a, alg.lift(x, x.level() + 2)), premeasure(*m, a, x), 1e-12);
      }
    }
  }
}

TEST_F(Cylinders, Additivity) {
  EXPECT_LT(additivity_check(alg, sticky, Word{}, {E("a"), E("b")}), 1e-12);
  EXPECT_EQ(additivity_check(alg, sticky, ab.parse("a"), {S("2:ab,ba")}), 0.0);
  EXPECT_THROW(additivity_check(alg, sticky, Word{}, {E("a"), E("ab")}), InvalidArgument);
}

TEST_F(Cylinders, Majorization) {
  const auto a = ab.parse("a");
  EXPECT_NEAR(majorization_check(sticky, a, alg.full()), 1.0 / 0.5 - 1.0, 1e-15);
  EXPECT_NEAR(majorization_check(iid, a, E("b")), 0.5, 1e-15);
  EXPECT_NEAR(majorization_check(sticky, a, E("a")), 0.1, 1e-15);
  EXPECT_THROW(majorization_check(alt, ab.parse("aa"), E("a")), ZeroProbability);
}

}  // namespace
}  // namespace oom
