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

#include "oom/cylinder.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "oom/errors.hpp"

namespace oom {

CylinderSet::CylinderSet(std::size_t level, std::set<Word> strings) : level_(level), strings_(std::move(strings)) {
  for (const auto& s : strings_)
    if (s.size() != level_)
      throw InvalidArgument("cylinder set at level " + std::to_string(level_) + " contains a string of length " +
                            std::to_string(s.size()));
}

CylinderAlgebra::CylinderAlgebra(Alphabet alphabet, std::size_t lift_budget)
    : alphabet_(std::move(alphabet)), lift_budget_(lift_budget) {}

CylinderSet CylinderAlgebra::full() const { return CylinderSet(0, {Word{}}); }

CylinderSet CylinderAlgebra::empty(std::size_t level) const { return CylinderSet(level, {}); }

CylinderSet CylinderAlgebra::cylinder(const Word& word) const {
  alphabet_.check(word);
  return CylinderSet(word.size(), {word});
}

void CylinderAlgebra::check(const CylinderSet& c) const {
  for (const auto& s : c.strings()) alphabet_.check(s);
}

CylinderSet CylinderAlgebra::lift(const CylinderSet& c, std::size_t k) const {
  check(c);
  if (k < c.level())
    throw InvalidArgument("cannot lift a level-" + std::to_string(c.level()) + " set down to level " +
                          std::to_string(k));
  if (k == c.level()) return c;
  const std::size_t extra = k - c.level();
  // Budget check before materializing anything.
  double projected = static_cast<double>(c.strings().size());
  for (std::size_t i = 0; i < extra; ++i) projected *= static_cast<double>(alphabet_.size());
  if (projected > static_cast<double>(lift_budget_))
    throw BudgetExceeded("lifting to level " + std::to_string(k) + " needs " + std::to_string(projected) +
                         " strings, budget is " + std::to_string(lift_budget_));
  const auto suffixes = alphabet_.words_of_length(extra);
  std::set<Word> out;
  for (const auto& s : c.strings())
    for (const auto& w : suffixes) out.insert(out.end(), concat(s, w));
  return CylinderSet(k, std::move(out));
}

CylinderSet CylinderAlgebra::complement(const CylinderSet& c) const {
  check(c);
  std::set<Word> out;
  for (auto& w : alphabet_.words_of_length(c.level()))
    if (!c.strings().contains(w)) out.insert(out.end(), std::move(w));
  return CylinderSet(c.level(), std::move(out));
}

CylinderSet CylinderAlgebra::intersect(const CylinderSet& c1, const CylinderSet& c2) const {
  const auto k = std::max(c1.level(), c2.level());
  const auto a = lift(c1, k);
  const auto b = lift(c2, k);
  std::set<Word> out;
  std::set_intersection(a.strings().begin(), a.strings().end(), b.strings().begin(), b.strings().end(),
                        std::inserter(out, out.end()));
  return CylinderSet(k, std::move(out));
}

CylinderSet CylinderAlgebra::unite(const CylinderSet& c1, const CylinderSet& c2) const {
  const auto k = std::max(c1.level(), c2.level());
  const auto a = lift(c1, k);
  const auto b = lift(c2, k);
  std::set<Word> out;
  std::set_union(a.strings().begin(), a.strings().end(), b.strings().begin(), b.strings().end(),
                 std::inserter(out, out.end()));
  return CylinderSet(k, std::move(out));
}

bool CylinderAlgebra::equal(const CylinderSet& c1, const CylinderSet& c2) const {
  const auto k = std::max(c1.level(), c2.level());
  return lift(c1, k).strings() == lift(c2, k).strings();
}

bool CylinderAlgebra::subset(const CylinderSet& c1, const CylinderSet& c2) const {
  return equal(intersect(c1, c2), c1);
}

bool CylinderAlgebra::disjoint(const CylinderSet& c1, const CylinderSet& c2) const {
  return intersect(c1, c2).empty();
}

CylinderSet CylinderAlgebra::parse(std::string_view text) const {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("cylinder set '" + std::string(text) + "' lacks 'level:'");
  std::size_t level = 0;
  const auto head = text.substr(0, colon);
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), level);
  if (ec != std::errc() || ptr != head.data() + head.size())
    throw ParseError("cylinder level '" + std::string(head) + "' is not a non-negative integer");
  std::set<Word> strings;
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto token = rest.substr(0, comma);
    Word w = alphabet_.parse(token);
    if (w.size() != level)
      throw ParseError("cylinder string '" + std::string(token) + "' does not have length " + std::to_string(level));
    strings.insert(std::move(w));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return CylinderSet(level, std::move(strings));
}

std::string CylinderAlgebra::format(const CylinderSet& c) const {
  std::string out = std::to_string(c.level()) + ":";
  bool first = true;
  for (const auto& s : c.strings()) {
    if (!first) out += ',';
    out += alphabet_.format(s);
    first = false;
  }
  return out;
}

double premeasure(const MatrixOom& m, const Word& abar, const CylinderSet& c) {
  m.alphabet().check(abar);
  double total = 0.0;
  for (const auto& b : c.strings()) total += conditional_probability(m, b, abar);
  return total;
}

double additivity_check(const CylinderAlgebra& algebra, const MatrixOom& m, const Word& abar,
                        const std::vector<CylinderSet>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!algebra.disjoint(parts[i], parts[j]))
        throw InvalidArgument("parts " + std::to_string(i) + " (" + algebra.format(parts[i]) + ") and " +
                              std::to_string(j) + " (" + algebra.format(parts[j]) + ") intersect");
  CylinderSet joined = algebra.empty();
  double separate = 0.0;
  for (const auto& p : parts) {
    joined = algebra.unite(joined, p);
    separate += premeasure(m, abar, p);
  }
  return std::abs(premeasure(m, abar, joined) - separate);
}

double majorization_check(const MatrixOom& m, const Word& abar, const CylinderSet& c) {
  const double pa = string_probability(m, abar);
  if (pa == 0.0)
    throw ZeroProbability("majorization needs P(" + m.alphabet().format(abar) + ") > 0");
  return premeasure(m, Word{}, c) / pa - premeasure(m, abar, c);
}

}  // namespace oom
