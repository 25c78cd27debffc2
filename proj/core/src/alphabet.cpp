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

#include "prefsynt/alphabet.hpp"

#include <algorithm>
#include <set>

namespace prefsynt {

Word word_from_chars(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) w.emplace_back(1, c);
  return w;
}

std::string word_to_string(const Word& w) {
  bool single = std::all_of(w.begin(), w.end(),
                            [](const std::string& a) { return a.size() == 1; });
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += w[i];
  }
  return out;
}

static bool valid_symbol(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return !std::isdigit(static_cast<unsigned char>(s[0]));
}

Alphabet::Alphabet(std::vector<std::string> system_letters,
                   std::vector<std::string> environment_letters)
    : sys_(std::move(system_letters)), env_(std::move(environment_letters)) {
  if (sys_.empty() && env_.empty())
    throw std::invalid_argument("alphabet: both sides empty");
  std::set<std::string> seen;
  for (const auto* side : {&sys_, &env_}) {
    for (const auto& a : *side) {
      if (!valid_symbol(a))
        throw std::invalid_argument("alphabet: invalid action symbol '" + a + "'");
      if (!seen.insert(a).second)
        throw std::invalid_argument("alphabet: duplicate action symbol '" + a + "'");
    }
  }
}

std::vector<std::string> Alphabet::all_letters() const {
  std::vector<std::string> all = sys_;
  all.insert(all.end(), env_.begin(), env_.end());
  std::sort(all.begin(), all.end());
  return all;
}

bool Alphabet::contains(const std::string& letter) const {
  auto in = [&](const std::vector<std::string>& v) {
    return std::find(v.begin(), v.end(), letter) != v.end();
  };
  return in(sys_) || in(env_);
}

Player Alphabet::player_of(const std::string& letter) const {
  if (std::find(sys_.begin(), sys_.end(), letter) != sys_.end())
    return Player::System;
  if (std::find(env_.begin(), env_.end(), letter) != env_.end())
    return Player::Environment;
  throw std::invalid_argument("alphabet: unknown action symbol '" + letter + "'");
}

}  // namespace prefsynt
