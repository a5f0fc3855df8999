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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace oom {

/// Index of a symbol inside its alphabet. Ordering follows the alphabet order.
struct Symbol {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

/// A finite observation sequence. Lexicographic comparison of words follows
/// the alphabet order of their symbols.
using Word = std::vector<Symbol>;

Word concat(const Word& first, const Word& second);

/// Finite ordered set of observation symbols.
///
/// Words are written by concatenating symbol names when every symbol is a
/// single character ("abba"), and with '.' separators otherwise
/// ("up.down.up"). The empty word is written "" or "eps".
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& name(Symbol s) const { return symbols_.at(s.index); }

  /// Throws UnknownSymbol.
  Symbol symbol(std::string_view name) const;
  bool contains(std::string_view name) const;

  Word parse(std::string_view text) const;
  std::string format(const Word& word) const;

  /// Throws UnknownSymbol if any index is out of range.
  void check(const Word& word) const;

  /// All words of the given length in lexicographic order.
  std::vector<Word> words_of_length(std::size_t length) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::uint32_t> index_;
  bool single_char_ = true;
};

}  // namespace oom
