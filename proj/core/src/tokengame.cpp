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

#include "prefsynt/tokengame.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace prefsynt {

namespace {

// All count vectors of total n over m slots, lexicographic by slot counts.
void enumerate_multisets(int n, int m, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == m - 1) {
    cur.push_back(n);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int c = n; c >= 0; --c) {
    cur.push_back(c);
    enumerate_multisets(n - c, m, cur, emit);
    cur.pop_back();
  }
}

double multiset_count(int n, int m) {
  // C(n + m - 1, n)
  double r = 1;
  for (int i = 1; i <= n; ++i) r = r * (m - 1 + i) / i;
  return r;
}

std::vector<std::vector<int>> all_multisets(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur;
  enumerate_multisets(n, m, cur, [&](const std::vector<int>& v) { out.push_back(v); });
  return out;
}

std::vector<std::vector<int>> descendant_lists(const TypeTree& t) {
  std::vector<std::vector<int>> desc(t.num_nodes());
  for (int a = 0; a < t.num_nodes(); ++a) {
    desc[a].push_back(a);  // staying put first, so pass enumerates first
    for (int b = 0; b < t.num_nodes(); ++b)
      if (b != a && t.leq[a][b]) desc[a].push_back(b);
  }
  return desc;
}

}  // namespace

TokenGame::TokenGame(const TypeSpace& ts, const AcceptanceSet& acc, int n_s,
                     int n_e, GameCaps caps)
    : ts_(ts), acc_(acc), n_s_(n_s), n_e_(n_e) {
  if (n_s < 0 || n_e < 0)
    throw std::invalid_argument("token game: negative token count");
  int m_s = ts.system.num_nodes(), m_e = ts.environment.num_nodes();
  double estimate = multiset_count(n_s, m_s) * multiset_count(n_e, m_e) * 2;
  if (estimate > static_cast<double>(caps.max_vertices))
    throw BudgetError("token game: estimated " + std::to_string(estimate) +
                      " vertices exceeds cap " + std::to_string(caps.max_vertices));

  descendants_sys_ = descendant_lists(ts.system);
  descendants_env_ = descendant_lists(ts.environment);

  auto sys_multisets = all_multisets(n_s, m_s);
  auto env_multisets = all_multisets(n_e, m_e);
  configs_.reserve(sys_multisets.size() * env_multisets.size());
  for (const auto& s : sys_multisets)
    for (const auto& e : env_multisets) configs_.push_back({s, e});

  accepting_.resize(configs_.size());
  for (std::size_t i = 0; i < configs_.size(); ++i) {
    TaggedCounts counts(ts.tagged_count(), 0);
    for (int n = 0; n < m_s; ++n)
      counts[ts.tagged_slot(Player::System, n)] = configs_[i].sys[n];
    for (int n = 0; n < m_e; ++n)
      counts[ts.tagged_slot(Player::Environment, n)] = configs_[i].env[n];
    accepting_[i] = acc_.contains(threshold_counts(ts, counts));
    config_index_.emplace(config_key(configs_[i]), i);
  }
  succ_cache_.resize(num_vertices());
  succ_ready_.assign(num_vertices(), false);
}

std::string TokenGame::config_key(const Configuration& c) const {
  std::vector<std::string> parts;
  for (int n = 0; n < static_cast<int>(c.sys.size()); ++n)
    if (c.sys[n] > 0)
      parts.push_back("S:" + std::to_string(n) + ":" + std::to_string(c.sys[n]));
  for (int n = 0; n < static_cast<int>(c.env.size()); ++n)
    if (c.env[n] > 0)
      parts.push_back("E:" + std::to_string(n) + ":" + std::to_string(c.env[n]));
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) key += ',';
    key += parts[i];
  }
  return key;
}

std::size_t TokenGame::initial_vertex() const {
  Configuration init;
  init.sys.assign(ts_.system.num_nodes(), 0);
  init.env.assign(ts_.environment.num_nodes(), 0);
  if (n_s_ > 0) init.sys[ts_.system.root] = n_s_;
  if (n_e_ > 0) init.env[ts_.environment.root] = n_e_;
  return vertex_of(init, Player::Environment);
}

std::size_t TokenGame::vertex_of(const Configuration& c, Player turn) const {
  auto it = config_index_.find(config_key(c));
  if (it == config_index_.end())
    throw std::invalid_argument("token game: configuration not in this game");
  return it->second * 2 + (turn == Player::System ? 1 : 0);
}

// Enumerates every redistribution of `counts` where each source node sends
// its tokens to descendants. Emits the resulting count vector plus the
// non-trivial transfers; the all-stay redistribution (pass) is emitted first.
void TokenGame::enumerate_player_moves(
    Player p, const std::vector<int>& counts,
    const std::function<void(const std::vector<int>&,
                             const std::vector<Transfer>&)>& emit) const {
  const auto& desc =
      p == Player::System ? descendants_sys_ : descendants_env_;
  int m = static_cast<int>(counts.size());
  std::vector<int> result(m, 0);
  std::vector<Transfer> transfers;

  std::function<void(int)> per_node = [&](int node) {
    if (node == m) {
      emit(result, transfers);
      return;
    }
    if (counts[node] == 0) {
      per_node(node + 1);
      return;
    }
    const std::vector<int>& dests = desc[node];
    // distribute counts[node] tokens over dests, "stay" direction first
    std::function<void(std::size_t, int)> distribute = [&](std::size_t di,
                                                           int left) {
      if (di + 1 == dests.size()) {
        int dest = dests[di];
        result[dest] += left;
        if (left > 0 && dest != node) transfers.push_back({node, dest, left});
        per_node(node + 1);
        if (left > 0 && dest != node) transfers.pop_back();
        result[dest] -= left;
        return;
      }
      int dest = dests[di];
      for (int take = left; take >= 0; --take) {
        result[dest] += take;
        if (take > 0 && dest != node) transfers.push_back({node, dest, take});
        distribute(di + 1, left - take);
        if (take > 0 && dest != node) transfers.pop_back();
        result[dest] -= take;
      }
    };
    distribute(0, counts[node]);
  };
  per_node(0);
}

const std::vector<std::size_t>& TokenGame::successors(std::size_t v) const {
  if (!succ_ready_[v]) {
    const Configuration& c = config(v);
    Player mover = turn(v);
    Player next_turn = opponent(mover);
    std::vector<std::size_t> succs;
    std::unordered_set<std::string> seen;
    auto emit = [&](const std::vector<int>& result, const std::vector<Transfer>&) {
      Configuration nc = c;
      (mover == Player::System ? nc.sys : nc.env) = result;
      std::string key = config_key(nc);
      if (seen.insert(key).second)
        succs.push_back(config_index_.at(key) * 2 +
                        (next_turn == Player::System ? 1 : 0));
    };
    enumerate_player_moves(mover, mover == Player::System ? c.sys : c.env, emit);
    succ_cache_[v] = std::move(succs);
    succ_ready_[v] = true;
  }
  return succ_cache_[v];
}

Move TokenGame::move_between(std::size_t v, std::size_t succ) const {
  const Configuration& c = config(v);
  Player mover = turn(v);
  const std::vector<int>& target =
      mover == Player::System ? config(succ).sys : config(succ).env;
  Move found{mover, {}};
  bool ok = false;
  auto emit = [&](const std::vector<int>& result, const std::vector<Transfer>& tr) {
    if (!ok && result == target) {
      found.transfers = tr;
      ok = true;
    }
  };
  enumerate_player_moves(mover, mover == Player::System ? c.sys : c.env, emit);
  if (!ok || turn(succ) == mover)
    throw std::invalid_argument("token game: no move realizes this edge");
  return found;
}

long long TokenGame::potential(const Configuration& c) const {
  long long phi = 0;
  for (int n = 0; n < static_cast<int>(c.sys.size()); ++n)
    phi += static_cast<long long>(c.sys[n]) * ts_.system.nodes[n].height;
  for (int n = 0; n < static_cast<int>(c.env.size()); ++n)
    phi += static_cast<long long>(c.env[n]) * ts_.environment.nodes[n].height;
  return phi;
}

std::size_t TokenGame::edge_count() const {
  std::size_t edges = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) edges += successors(v).size();
  return edges;
}

// ---------------------------------------------------------------------------
// Büchi solving

namespace {

// System attractor of `target` with BFS ranks. System-turn vertices enter as
// soon as one successor is attracted, Environment-turn vertices once all are.
void attractor(const TokenGame& game,
               const std::vector<std::vector<std::size_t>>& preds,
               const std::vector<bool>& target, std::vector<bool>& in,
               std::vector<int>& rank) {
  std::size_t n = game.num_vertices();
  in.assign(n, false);
  rank.assign(n, -1);
  std::vector<std::size_t> remaining(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    remaining[v] = game.successors(v).size();
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (target[v]) {
      in[v] = true;
      rank[v] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : preds[v]) {
      if (in[u]) continue;
      bool attract = game.turn(u) == Player::System || --remaining[u] == 0;
      if (attract) {
        in[u] = true;
        rank[u] = rank[v] + 1;
        queue.push_back(u);
      }
    }
  }
}

}  // namespace

SolveResult solve_buchi(const TokenGame& game) {
  std::size_t n = game.num_vertices();
  SolveResult r;
  r.stats.vertices = n;

  std::vector<std::vector<std::size_t>> preds(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u : game.successors(v)) preds[u].push_back(v);
  r.stats.edges = game.edge_count();

  std::vector<bool> target(n);
  for (std::size_t v = 0; v < n; ++v) target[v] = game.accepting(v);

  std::vector<bool> attr;
  std::vector<int> rank;
  while (true) {
    ++r.stats.iterations;
    attractor(game, preds, target, attr, rank);
    // keep accepting vertices from which System can force re-entry into the
    // accepting set (one step into the attractor)
    bool changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!target[v]) continue;
      bool reenter;
      if (game.turn(v) == Player::System) {
        reenter = false;
        for (std::size_t u : game.successors(v)) reenter = reenter || attr[u];
      } else {
        reenter = true;
        for (std::size_t u : game.successors(v)) reenter = reenter && attr[u];
      }
      if (!reenter) {
        target[v] = false;
        changed = true;
      }
    }
    if (!changed) break;
  }
  attractor(game, preds, target, attr, rank);

  r.system_wins = attr;
  r.rank = rank;
  r.strategy_succ.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t v = 1; v < n; v += 2) {  // System-turn vertices are odd
    if (!attr[v]) continue;
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t u : game.successors(v)) {
      if (!attr[u]) continue;
      if (rank[v] > 0 && rank[u] >= rank[v]) continue;  // must make progress
      if (best == static_cast<std::size_t>(-1) || rank[u] < rank[best]) best = u;
    }
    r.strategy_succ[v] = best;
  }
  return r;
}

std::vector<bool> solve_descent(const TokenGame& game) {
  std::size_t nc = game.num_configs();
  std::vector<std::size_t> order(nc);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return game.potential(game.config(a * 2)) < game.potential(game.config(b * 2));
  });

  std::vector<bool> win(game.num_vertices(), false);
  for (std::size_t ci : order) {
    std::size_t env_vertex = ci * 2, sys_vertex = ci * 2 + 1;
    bool acc = game.accepting(env_vertex);
    bool good_s = false;
    for (std::size_t u : game.successors(sys_vertex)) {
      if (u == env_vertex) continue;  // pass
      if (win[u]) { good_s = true; break; }
    }
    bool bad_e = false;
    for (std::size_t u : game.successors(env_vertex)) {
      if (u == sys_vertex) continue;  // pass
      if (!win[u]) { bad_e = true; break; }
    }
    win[sys_vertex] = good_s || (!bad_e && acc);
    win[env_vertex] = !bad_e && (acc || good_s);
  }
  return win;
}

Move extract_strategy(const TokenGame& game, const SolveResult& result,
                      std::size_t vertex) {
  if (game.turn(vertex) != Player::System)
    throw std::invalid_argument("extract: not a System-turn vertex");
  if (!result.system_wins[vertex])
    throw std::invalid_argument("extract: vertex is not in the winning region");
  std::size_t succ = result.strategy_succ[vertex];
  if (succ == static_cast<std::size_t>(-1))
    throw std::invalid_argument("extract: no stored move for this vertex");
  return game.move_between(vertex, succ);
}

}  // namespace prefsynt
