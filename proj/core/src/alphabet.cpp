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

#include "oom/alphabet.hpp"

#include "oom/errors.hpp"

namespace oom {

Word concat(const Word& first, const Word& second) {
  Word out;
  out.reserve(first.size() + second.size());
  out.insert(out.end(), first.begin(), first.end());
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidArgument("alphabet must not be empty");
  for (std::uint32_t i = 0; i < symbols_.size(); ++i) {
    const auto& s = symbols_[i];
    if (s.empty()) throw InvalidArgument("alphabet symbol must be a non-empty string");
    if (s == "eps") throw InvalidArgument("'eps' is reserved for the empty word");
    if (s.find_first_of(".,: \t\n") != std::string::npos)
      throw InvalidArgument("alphabet symbol '" + s + "' contains a reserved character");
    if (!index_.emplace(s, i).second)
      throw InvalidArgument("duplicate alphabet symbol '" + s + "'");
    if (s.size() != 1) single_char_ = false;
  }
}

Symbol Alphabet::symbol(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
  return Symbol{it->second};
}

bool Alphabet::contains(std::string_view name) const {
  return index_.contains(std::string(name));
}

Word Alphabet::parse(std::string_view text) const {
  Word word;
  if (text.empty() || text == "eps") return word;
  if (single_char_ && text.find('.') == std::string_view::npos) {
    for (char c : text) word.push_back(symbol(std::string_view(&c, 1)));
    return word;
  }
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto token = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (token.empty()) throw ParseError("empty symbol in word '" + std::string(text) + "'");
    word.push_back(symbol(token));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return word;
}

std::string Alphabet::format(const Word& word) const {
  if (word.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single_char_ && i > 0) out += '.';
    out += name(word[i]);
  }
  return out;
}

void Alphabet::check(const Word& word) const {
  for (auto s : word)
    if (s.index >= symbols_.size())
      throw UnknownSymbol("symbol index " + std::to_string(s.index) + " outside alphabet of size " +
                          std::to_string(symbols_.size()));
}

std::vector<Word> Alphabet::words_of_length(std::size_t length) const {
  std::vector<Word> out;
  const auto n = static_cast<std::uint32_t>(size());
  Word w(length, Symbol{0});
  while (true) {
    out.push_back(w);
    // odometer increment, last position fastest
    std::size_t pos = length;
    while (true) {
      if (pos == 0) return out;
      --pos;
      if (++w[pos].index < n) break;
      w[pos].index = 0;
    }
  }
}

}  // namespace oom
