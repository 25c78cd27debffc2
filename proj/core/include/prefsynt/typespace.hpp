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

#include <string>
#include <vector>

#include "prefsynt/alphabet.hpp"
#include "prefsynt/dataword.hpp"
#include "prefsynt/efgames.hpp"

namespace prefsynt {

struct BuildBudget {
  int max_states = 4000;        // congruence automaton states per alphabet
  GameBudget game{8, 64, 4};    // oracle budget for internal equivalence calls
};

/// The extension order violated a law it provably satisfies (partial-order
/// laws, unique minimum, representative independence): a real bug somewhere,
/// reported with the offending representatives.
struct TypeOrderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TypeNode {
  int id;
  Word representative;  // shortest, then lexicographically least
  int height = 0;       // 0 on maximal nodes, maximal on the root
  std::vector<int> parents;   // immediate predecessors towards the root
  std::vector<int> children;  // immediate successors
};

/// Word types of a fixed depth over one letter set: the congruence automaton,
/// its quotient into types, and the extension order between types.
///
/// Automaton states are classes of full first-order equivalence at depth k
/// (a congruence for concatenation, unlike prefix-logic equivalence); the
/// quotient map glues states whose representatives agree on all prefix-logic
/// sentences of depth k. A type tau extends to tau' iff some automaton state
/// of tau reaches some state of tau'.
///
/// On one-letter alphabets the order is a chain and in general it is expected
/// tree-shaped, but already two letters create joins at depth 2 (tp(aba) and
/// tp(abb) are incomparable and both extend to tp(abab), which therefore has
/// two immediate parents). Such joins are diagnosed via multi_parent_nodes()
/// and surfaced by every consumer, never papered over; all algorithms in this
/// project only rely on the verified partial-order facts, so they operate on
/// the general shape.
class TypeTree {
 public:
  struct AutoState {
    Word representative;
    int node = -1;           // quotient type
    std::vector<int> next;   // per letter index
  };

  int k = 0;
  std::vector<std::string> letters;  // sorted sub-alphabet
  std::vector<AutoState> states;
  int initial_state = 0;
  std::vector<TypeNode> nodes;
  int root = 0;
  std::vector<std::vector<bool>> leq;  // leq[a][b]: a extends to b

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int letter_index(const std::string& a) const;  // -1 if absent

  bool is_tree() const;
  std::vector<int> multi_parent_nodes() const;

  /// Runs the automaton; throws on letters outside the sub-alphabet.
  int classify_state(const Word& u) const;
  int classify(const Word& u) const { return states[classify_state(u)].node; }
};

TypeTree build_type_tree(std::vector<std::string> letters, int k,
                         const BuildBudget& budget = {});

/// Per-player type trees plus the combined tagged index {(player, node)}.
/// Types are tagged by player: empty System and Environment classes share the
/// word type of the empty word yet are distinguishable in the logic, so data
/// words are abstracted over tagged types throughout.
class TypeSpace {
 public:
  int k = 0;
  Alphabet alphabet{{}, {"_"}};
  TypeTree system;
  TypeTree environment;

  const TypeTree& tree(Player p) const {
    return p == Player::System ? system : environment;
  }
  int tagged_count() const { return system.num_nodes() + environment.num_nodes(); }
  /// System nodes occupy slots [0, |system|), Environment nodes follow.
  int tagged_slot(Player p, int node) const {
    return p == Player::System ? node : system.num_nodes() + node;
  }
  std::pair<Player, int> slot_info(int slot) const {
    return slot < system.num_nodes()
               ? std::make_pair(Player::System, slot)
               : std::make_pair(Player::Environment, slot - system.num_nodes());
  }
};

TypeSpace build_typespace(const Alphabet& alphabet, int k,
                          const BuildBudget& budget = {});

int classify_word(const TypeSpace& ts, Player p, const Word& u);

/// Exact class counts per tagged slot; empty classes count at their player's
/// root.
using TaggedCounts = std::vector<long long>;
TaggedCounts tagged_collection(const TypeSpace& ts, const DataWord& w);

/// Shortest (then lexicographically least) suffix v with
/// classify(current . v) = target. Throws if target is not reachable.
Word realize_extension(const TypeSpace& ts, Player p, const Word& current,
                       int target_node);

/// Types of every prefix of u followed by the extension letters, starting
/// from the empty prefix; used to observe type stabilization.
std::vector<int> stationary_probe(const TypeSpace& ts, Player p, const Word& u,
                                  const std::vector<std::string>& extensions);

}  // namespace prefsynt
