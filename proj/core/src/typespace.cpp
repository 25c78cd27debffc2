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

#include "prefsynt/typespace.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace prefsynt {

namespace {

// Cheap invariants of depth-k first-order equivalence, used only to prune
// oracle calls: words with different signatures are never equivalent.
struct Signature {
  int clamped_length;
  std::vector<int> clamped_letter_counts;
  std::string first, last;
  auto operator<=>(const Signature&) const = default;
};

Signature signature_of(const Word& w, const std::vector<std::string>& letters,
                       int k) {
  Signature s;
  int len_cap = (1 << k) - 1;
  s.clamped_length = std::min<int>(static_cast<int>(w.size()), len_cap);
  s.clamped_letter_counts.assign(letters.size(), 0);
  for (const auto& a : w) {
    auto it = std::find(letters.begin(), letters.end(), a);
    int i = static_cast<int>(it - letters.begin());
    s.clamped_letter_counts[i] = std::min(s.clamped_letter_counts[i] + 1, k);
  }
  if (k >= 2 && !w.empty()) {
    s.first = w.front();
    s.last = w.back();
  }
  return s;
}

}  // namespace

int TypeTree::letter_index(const std::string& a) const {
  auto it = std::find(letters.begin(), letters.end(), a);
  return it == letters.end() ? -1 : static_cast<int>(it - letters.begin());
}

int TypeTree::classify_state(const Word& u) const {
  int s = initial_state;
  for (const auto& a : u) {
    int i = letter_index(a);
    if (i < 0)
      throw std::invalid_argument("classify: letter '" + a +
                                  "' outside this sub-alphabet");
    s = states[s].next[i];
  }
  return s;
}

TypeTree build_type_tree(std::vector<std::string> letters, int k,
                         const BuildBudget& budget) {
  if (k < 1) throw std::invalid_argument("type tree: depth must be >= 1");
  std::sort(letters.begin(), letters.end());

  TypeTree t;
  t.k = k;
  t.letters = letters;

  // 1. Breadth-first construction of the depth-k first-order congruence
  //    automaton. Discovery order makes every state representative the
  //    shortest, then lexicographically least word of its state.
  std::multimap<Signature, int> by_signature;
  auto find_state = [&](const Word& w, const Signature& sig) -> int {
    auto [lo, hi] = by_signature.equal_range(sig);
    for (auto it = lo; it != hi; ++it) {
      if (fo_equiv_words(w, t.states[it->second].representative, k, budget.game))
        return it->second;
    }
    return -1;
  };

  t.states.push_back({{}, -1, std::vector<int>(letters.size(), -1)});
  by_signature.emplace(signature_of({}, letters, k), 0);
  for (size_t s = 0; s < t.states.size(); ++s) {
    for (size_t ai = 0; ai < letters.size(); ++ai) {
      Word w = t.states[s].representative;
      w.push_back(letters[ai]);
      Signature sig = signature_of(w, letters, k);
      int found = find_state(w, sig);
      if (found < 0) {
        if (static_cast<int>(t.states.size()) >= budget.max_states)
          throw BudgetError("type tree: congruence automaton exceeds " +
                            std::to_string(budget.max_states) + " states");
        found = static_cast<int>(t.states.size());
        t.states.push_back({w, -1, std::vector<int>(letters.size(), -1)});
        by_signature.emplace(sig, found);
      }
      t.states[s].next[ai] = found;
    }
  }

  // 2. Quotient states by prefix-logic equivalence of their representatives.
  int num_states = static_cast<int>(t.states.size());
  for (int s = 0; s < num_states; ++s) {
    for (int n = 0; n < static_cast<int>(t.nodes.size()); ++n) {
      if (preffo_equiv_words(t.states[s].representative, t.nodes[n].representative,
                             k, budget.game)) {
        t.states[s].node = n;
        break;
      }
    }
    if (t.states[s].node < 0) {
      t.states[s].node = static_cast<int>(t.nodes.size());
      TypeNode fresh;
      fresh.id = t.states[s].node;
      fresh.representative = t.states[s].representative;
      t.nodes.push_back(std::move(fresh));
    }
  }
  t.root = t.states[t.initial_state].node;

  // 3. Extension order from automaton reachability, lifted to nodes.
  std::vector<std::set<int>> reach(num_states);
  for (int s = 0; s < num_states; ++s) {
    std::deque<int> queue{s};
    std::vector<bool> seen(num_states, false);
    seen[s] = true;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      reach[s].insert(t.states[cur].node);
      for (int nxt : t.states[cur].next)
        if (!seen[nxt]) { seen[nxt] = true; queue.push_back(nxt); }
    }
  }
  // Representative independence: states glued into one node must reach the
  // same set of nodes, otherwise the extension order would be ill-defined.
  int m = t.num_nodes();
  std::vector<std::set<int>> node_reach(m);
  std::vector<int> node_first_state(m, -1);
  for (int s = 0; s < num_states; ++s) {
    int n = t.states[s].node;
    if (node_first_state[n] < 0) {
      node_first_state[n] = s;
      node_reach[n] = reach[s];
    } else if (node_reach[n] != reach[s]) {
      throw TypeOrderError(
          "type order: reachability differs between states of one type (" +
          word_to_string(t.states[node_first_state[n]].representative) + " vs " +
          word_to_string(t.states[s].representative) + ")");
    }
  }
  t.leq.assign(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b : node_reach[a]) t.leq[a][b] = true;

  // 4. Structural checks: a partial order with minimum at the empty word's
  //    type. These laws are theorems; a violation is a bug and is fatal.
  for (int a = 0; a < m; ++a) {
    if (!t.leq[t.root][a]) throw TypeOrderError("type order: root is not a minimum");
    if (!t.leq[a][a]) throw TypeOrderError("type order: not reflexive");
    for (int b = 0; b < m; ++b)
      if (a != b && t.leq[a][b] && t.leq[b][a])
        throw TypeOrderError("type order: antisymmetry violation between " +
                             word_to_string(t.nodes[a].representative) + " and " +
                             word_to_string(t.nodes[b].representative));
  }

  // 5. Hasse diagram. Multiple immediate parents (joins appear from two
  //    letters on) are recorded per node and surfaced by consumers.
  for (int b = 0; b < m; ++b) {
    if (b == t.root) continue;
    for (int a = 0; a < m; ++a) {
      if (a == b || !t.leq[a][b]) continue;
      bool immediate = true;
      for (int c = 0; c < m; ++c)
        if (c != a && c != b && t.leq[a][c] && t.leq[c][b]) { immediate = false; break; }
      if (immediate) {
        t.nodes[b].parents.push_back(a);
        t.nodes[a].children.push_back(b);
      }
    }
    if (t.nodes[b].parents.empty())
      throw TypeOrderError("type order: non-root node without Hasse parent");
  }

  // heights: longest downward path, 0 on maximal nodes
  std::vector<int> computed(m, -1);
  std::function<int(int)> height = [&](int n) -> int {
    if (computed[n] >= 0) return computed[n];
    int h = 0;
    for (int c : t.nodes[n].children) h = std::max(h, 1 + height(c));
    computed[n] = h;
    t.nodes[n].height = h;
    return h;
  };
  for (int n = 0; n < m; ++n) height(n);
  return t;
}

bool TypeTree::is_tree() const { return multi_parent_nodes().empty(); }

std::vector<int> TypeTree::multi_parent_nodes() const {
  std::vector<int> out;
  for (const TypeNode& n : nodes)
    if (n.parents.size() > 1) out.push_back(n.id);
  return out;
}

TypeSpace build_typespace(const Alphabet& alphabet, int k,
                          const BuildBudget& budget) {
  TypeSpace ts;
  ts.k = k;
  ts.alphabet = alphabet;
  ts.system = build_type_tree(alphabet.letters(Player::System), k, budget);
  ts.environment = build_type_tree(alphabet.letters(Player::Environment), k, budget);
  return ts;
}

int classify_word(const TypeSpace& ts, Player p, const Word& u) {
  return ts.tree(p).classify(u);
}

TaggedCounts tagged_collection(const TypeSpace& ts, const DataWord& w) {
  TaggedCounts counts(ts.tagged_count(), 0);
  auto class_words = classes(w);
  for (const ProcessDecl& p : w.processes()) {
    int node = classify_word(ts, p.player, class_words.at(p.id));
    ++counts[ts.tagged_slot(p.player, node)];
  }
  return counts;
}

Word realize_extension(const TypeSpace& ts, Player p, const Word& current,
                       int target_node) {
  const TypeTree& t = ts.tree(p);
  if (target_node < 0 || target_node >= t.num_nodes())
    throw std::invalid_argument("realize: no such type node");
  int start = t.classify_state(current);
  // BFS over automaton states, expanding letters in sorted order: the first
  // path to any state of the target type is shortest, then lexicographically
  // least.
  std::vector<int> prev_state(t.states.size(), -1);
  std::vector<int> prev_letter(t.states.size(), -1);
  std::vector<bool> seen(t.states.size(), false);
  std::deque<int> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    if (t.states[s].node == target_node) {
      Word suffix;
      for (int cur = s; cur != start; cur = prev_state[cur])
        suffix.push_back(t.letters[prev_letter[cur]]);
      std::reverse(suffix.begin(), suffix.end());
      return suffix;
    }
    for (size_t ai = 0; ai < t.letters.size(); ++ai) {
      int nxt = t.states[s].next[ai];
      if (!seen[nxt]) {
        seen[nxt] = true;
        prev_state[nxt] = s;
        prev_letter[nxt] = static_cast<int>(ai);
        queue.push_back(nxt);
      }
    }
  }
  throw std::invalid_argument("realize: type " +
                              word_to_string(t.nodes[target_node].representative) +
                              " is not reachable from " + word_to_string(current));
}

std::vector<int> stationary_probe(const TypeSpace& ts, Player p, const Word& u,
                                  const std::vector<std::string>& extensions) {
  const TypeTree& t = ts.tree(p);
  std::vector<int> out;
  int s = t.initial_state;
  out.push_back(t.states[s].node);
  auto step = [&](const std::string& a) {
    int i = t.letter_index(a);
    if (i < 0)
      throw std::invalid_argument("probe: letter '" + a + "' outside sub-alphabet");
    s = t.states[s].next[i];
    out.push_back(t.states[s].node);
  };
  for (const auto& a : u) step(a);
  for (const auto& a : extensions) step(a);
  return out;
}

}  // namespace prefsynt
