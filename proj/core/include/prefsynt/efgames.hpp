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

#include <vector>

#include "prefsynt/alphabet.hpp"
#include "prefsynt/dataword.hpp"

namespace prefsynt {

/// Exceeding a budget raises BudgetError; there is no silent truncation.
struct GameBudget {
  int max_rounds = 4;
  int max_positions = 12;
  int max_processes = 4;
};

/// A word with distinguished positions acting as constant symbols. Constant
/// vocabularies are matched by index across the two sides of a game.
struct MarkedWord {
  Word word;
  std::vector<int> constants;
};

/// Duplicator-win decision for the k-round prefix game on plain words: the
/// single bounding pebble is placed first, all later pebbles go strictly left
/// of it. Equivalent to agreement on all prefFO sentences of depth <= k.
bool preffo_equiv_words(const Word& u, const Word& v, int k, GameBudget b = {});

/// Classical k-round Ehrenfeucht-Fraisse game on labeled linear orders.
/// Constants are pre-placed pebbles exempt from round counting.
bool fo_equiv_words(const Word& u, const Word& v, int k, GameBudget b = {});
bool fo_equiv_words(const MarkedWord& u, const MarkedWord& v, int k,
                    GameBudget b = {});

/// Duplicator-win decision for the k-round prefix game on data words, with
/// process, bounding and prefix pebbles and the bounding/prefix move side
/// conditions. Equivalent to agreement on all prefFOdw sentences of depth <= k.
bool prefdw_equiv(const DataWord& w1, const DataWord& w2, int k, GameBudget b = {});

}  // namespace prefsynt
