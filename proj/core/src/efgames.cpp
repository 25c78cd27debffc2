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

#include "prefsynt/efgames.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

namespace prefsynt {

namespace {

void check_word_budget(const Word& u, const Word& v, int k, const GameBudget& b) {
  if (k < 0) throw std::invalid_argument("ef game: negative round count");
  if (k > b.max_rounds)
    throw BudgetError("ef game: " + std::to_string(k) + " rounds exceeds budget " +
                      std::to_string(b.max_rounds));
  if (static_cast<int>(u.size()) > b.max_positions ||
      static_cast<int>(v.size()) > b.max_positions)
    throw BudgetError("ef game: word length exceeds budget " +
                      std::to_string(b.max_positions));
}

// Shared atomic-profile check on words: the new pair (x, y) must relate to
// every placed pair the same way on both sides (letters, =, <).
bool word_pair_consistent(const Word& u, const Word& v, int x, int y,
                          const std::vector<std::pair<int, int>>& placed) {
  if (u[x] != v[y]) return false;
  for (auto [a, b] : placed) {
    if ((x == a) != (y == b)) return false;
    if ((x < a) != (y < b)) return false;
  }
  return true;
}

// Minimax for the word games. prefix_logic selects the prefFO rules: the
// first round is the unique bounding move, later rounds place pebbles
// strictly left of the bounding pebble.
class WordGameSolver {
 public:
  WordGameSolver(const Word& u, const Word& v, bool prefix_logic)
      : u_(u), v_(v), prefix_(prefix_logic) {}

  bool duplicator_wins(int rounds, std::vector<std::pair<int, int>> placed,
                       int bound_u = -1, int bound_v = -1) {
    if (rounds == 0) return true;
    std::vector<int> key;
    key.push_back(rounds);
    key.push_back(bound_u);
    key.push_back(bound_v);
    std::sort(placed.begin(), placed.end());
    for (auto [a, b] : placed) { key.push_back(a); key.push_back(b); }
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    bool result = true;
    for (int side = 0; side < 2 && result; ++side) {
      const Word& s = side == 0 ? u_ : v_;
      const Word& t = side == 0 ? v_ : u_;
      int bs = side == 0 ? bound_u : bound_v;
      int bt = side == 0 ? bound_v : bound_u;
      bool bounding_round = prefix_ && bs < 0;
      int limit = bounding_round || !prefix_ ? static_cast<int>(s.size()) : bs;
      for (int p = 0; p < limit && result; ++p) {
        // Duplicator needs some consistent response q with a win downstream.
        bool answered = false;
        int rlimit = bounding_round || !prefix_ ? static_cast<int>(t.size()) : bt;
        for (int q = 0; q < rlimit && !answered; ++q) {
          int x = side == 0 ? p : q, y = side == 0 ? q : p;
          auto all = placed;
          if (prefix_ && !bounding_round) all.emplace_back(bound_u, bound_v);
          if (!word_pair_consistent(u_, v_, x, y, all)) continue;
          if (bounding_round) {
            answered = duplicator_wins(rounds - 1, placed, x, y);
          } else {
            auto next = placed;
            next.emplace_back(x, y);
            answered = duplicator_wins(rounds - 1, std::move(next), bound_u, bound_v);
          }
        }
        if (!answered) result = false;  // Spoiler wins by playing p on this side
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  const Word& u_;
  const Word& v_;
  bool prefix_;
  std::map<std::vector<int>, bool> memo_;
};

std::string cache_key(const Word& u, const Word& v, int k,
                      const std::vector<int>* cu = nullptr,
                      const std::vector<int>* cv = nullptr) {
  std::ostringstream s;
  s << k << ';';
  for (const auto& a : u) s << a << ' ';
  s << ';';
  for (const auto& a : v) s << a << ' ';
  if (cu) {
    s << ';';
    for (int c : *cu) s << c << ' ';
    s << ';';
    for (int c : *cv) s << c << ' ';
  }
  return s.str();
}

std::mutex cache_mutex;
std::map<std::string, bool>& result_cache() {
  static std::map<std::string, bool> cache;
  return cache;
}

bool cached(const std::string& key, bool* out) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = result_cache().find(key);
  if (it == result_cache().end()) return false;
  *out = it->second;
  return true;
}

void store(const std::string& key, bool value) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  result_cache().emplace(key, value);
}

}  // namespace

bool preffo_equiv_words(const Word& u, const Word& v, int k, GameBudget b) {
  check_word_budget(u, v, k, b);
  std::string key = "p" + (u <= v ? cache_key(u, v, k) : cache_key(v, u, k));
  bool out;
  if (cached(key, &out)) return out;
  out = WordGameSolver(u, v, /*prefix_logic=*/true).duplicator_wins(k, {});
  store(key, out);
  return out;
}

bool fo_equiv_words(const Word& u, const Word& v, int k, GameBudget b) {
  return fo_equiv_words(MarkedWord{u, {}}, MarkedWord{v, {}}, k, b);
}

bool fo_equiv_words(const MarkedWord& u, const MarkedWord& v, int k, GameBudget b) {
  check_word_budget(u.word, v.word, k, b);
  if (u.constants.size() != v.constants.size())
    throw std::invalid_argument("fo game: constant vocabulary mismatch");
  std::vector<std::pair<int, int>> placed;
  for (size_t i = 0; i < u.constants.size(); ++i) {
    int cu = u.constants[i], cv = v.constants[i];
    if (cu < 0 || cu >= static_cast<int>(u.word.size()) || cv < 0 ||
        cv >= static_cast<int>(v.word.size()))
      throw std::invalid_argument("fo game: constant position out of range");
    // Constants are pre-placed pebbles: they must already agree atomically.
    if (!word_pair_consistent(u.word, v.word, cu, cv, placed)) return false;
    placed.emplace_back(cu, cv);
  }
  bool swap = !(u.word < v.word || (u.word == v.word && u.constants <= v.constants));
  std::string key =
      "f" + (swap ? cache_key(v.word, u.word, k, &v.constants, &u.constants)
                  : cache_key(u.word, v.word, k, &u.constants, &v.constants));
  bool out;
  if (cached(key, &out)) return out;
  out = WordGameSolver(u.word, v.word, /*prefix_logic=*/false)
            .duplicator_wins(k, std::move(placed));
  store(key, out);
  return out;
}

// ---------------------------------------------------------------------------
// Prefix EF game on data words

namespace {

enum PebbleKind { kProcess = 0, kBounding = 1, kPrefix = 2 };

struct Pebble {
  int kind;
  int e1, e2;  // elements in w1 / w2
  auto operator<=>(const Pebble&) const = default;
};

class DataGameSolver {
 public:
  DataGameSolver(const DataWord& w1, const DataWord& w2) : w1_(w1), w2_(w2) {}

  bool duplicator_wins(int rounds, std::vector<Pebble> placed) {
    if (rounds == 0) return true;
    std::sort(placed.begin(), placed.end());
    std::vector<int> key{rounds};
    for (const Pebble& p : placed) {
      key.push_back(p.kind);
      key.push_back(p.e1);
      key.push_back(p.e2);
    }
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    bool result = true;
    for (int side = 0; side < 2 && result; ++side) {
      const DataWord& s = side == 0 ? w1_ : w2_;
      const DataWord& t = side == 0 ? w2_ : w1_;
      for (int kind : {kProcess, kBounding, kPrefix}) {
        for (int p = 0; p < s.universe_size() && result; ++p) {
          if (!legal(s, side, kind, p, placed)) continue;
          bool answered = false;
          for (int q = 0; q < t.universe_size() && !answered; ++q) {
            if (!legal(t, 1 - side, kind, q, placed)) continue;
            int x = side == 0 ? p : q, y = side == 0 ? q : p;
            if (!consistent(x, y, placed)) continue;
            auto next = placed;
            next.push_back({kind, x, y});
            answered = duplicator_wins(rounds - 1, std::move(next));
          }
          if (!answered) result = false;
        }
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // side: 0 when placing in w1 (pebble field e1), 1 for w2.
  bool legal(const DataWord& w, int side, int kind, int e,
             const std::vector<Pebble>& placed) const {
    if (kind == kProcess) return w.is_process_element(e);
    if (w.is_process_element(e)) return false;
    if (kind == kBounding) {
      // no second bounding pebble in the same class
      for (const Pebble& p : placed) {
        if (p.kind != kBounding) continue;
        int other = side == 0 ? p.e1 : p.e2;
        if (w.class_of(other) == w.class_of(e)) return false;
      }
      return true;
    }
    // prefix move: some bounding pebble in this word lies in the same class,
    // strictly later
    for (const Pebble& p : placed) {
      if (p.kind != kBounding) continue;
      int other = side == 0 ? p.e1 : p.e2;
      if (w.class_of(other) == w.class_of(e) &&
          w.position_of(e) < w.position_of(other))
        return true;
    }
    return false;
  }

  bool pref_less(const DataWord& w, int a, int b) const {
    if (w.is_process_element(a) || w.is_process_element(b)) return false;
    return w.class_of(a) == w.class_of(b) && w.position_of(a) < w.position_of(b);
  }

  bool consistent(int x, int y, const std::vector<Pebble>& placed) const {
    if (w1_.is_process_element(x) != w2_.is_process_element(y)) return false;
    if (w1_.is_process_element(x)) {
      if (w1_.player_of_element(x) != w2_.player_of_element(y)) return false;
    } else if (w1_.letter_of(x) != w2_.letter_of(y)) {
      return false;
    }
    for (const Pebble& p : placed) {
      if ((x == p.e1) != (y == p.e2)) return false;
      if ((w1_.class_of(x) == w1_.class_of(p.e1)) !=
          (w2_.class_of(y) == w2_.class_of(p.e2)))
        return false;
      if (pref_less(w1_, x, p.e1) != pref_less(w2_, y, p.e2)) return false;
      if (pref_less(w1_, p.e1, x) != pref_less(w2_, p.e2, y)) return false;
    }
    return true;
  }

  const DataWord& w1_;
  const DataWord& w2_;
  std::map<std::vector<int>, bool> memo_;
};

}  // namespace

bool prefdw_equiv(const DataWord& w1, const DataWord& w2, int k, GameBudget b) {
  if (k < 0) throw std::invalid_argument("ef game: negative round count");
  if (k > b.max_rounds)
    throw BudgetError("prefix ef game: " + std::to_string(k) +
                      " rounds exceeds budget " + std::to_string(b.max_rounds));
  for (const DataWord* w : {&w1, &w2}) {
    if (w->num_events() > b.max_positions || w->num_processes() > b.max_processes)
      throw BudgetError("prefix ef game: instance too large (" +
                        std::to_string(w->num_processes()) + " processes, " +
                        std::to_string(w->num_events()) + " positions)");
  }
  if (!(w1.alphabet() == w2.alphabet()))
    throw std::invalid_argument("prefix ef game: alphabets differ");
  return DataGameSolver(w1, w2).duplicator_wins(k, {});
}

}  // namespace prefsynt
