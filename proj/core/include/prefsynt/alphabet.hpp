/*
 * Copyright 2026 The prefsynt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prefsynt {

enum class Player { System, Environment };

inline Player opponent(Player p) {
  return p == Player::System ? Player::Environment : Player::System;
}

inline char player_char(Player p) { return p == Player::System ? 'S' : 'E'; }

inline const char* player_name(Player p) {
  return p == Player::System ? "System" : "Environment";
}

/// A finite word over action symbols. Symbols are identifiers, so a word is a
/// sequence of strings rather than of chars.
using Word = std::vector<std::string>;

/// Splits a string into a word, one letter per character ("abaac" -> a,b,a,a,c).
Word word_from_chars(std::string_view s);

/// Inverse-ish of word_from_chars: single-char letters are concatenated,
/// anything else is joined with spaces. Empty word prints as "".
std::string word_to_string(const Word& w);

/// The two disjoint action alphabets, one per player.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> system_letters,
           std::vector<std::string> environment_letters);

  const std::vector<std::string>& letters(Player p) const {
    return p == Player::System ? sys_ : env_;
  }
  /// Union of both sides, sorted.
  std::vector<std::string> all_letters() const;

  bool contains(const std::string& letter) const;
  Player player_of(const std::string& letter) const;  // throws if unknown

  bool operator==(const Alphabet& other) const = default;

 private:
  std::vector<std::string> sys_;
  std::vector<std::string> env_;
};

/// Raised when an explicit size/enumeration budget is exceeded. Exceeding a
/// budget is always an error, never a silent truncation.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace prefsynt
