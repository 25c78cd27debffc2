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

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "prefsynt/acceptance.hpp"
#include "prefsynt/typespace.hpp"

namespace prefsynt {

/// Tokens are anonymous (the winning condition only counts them), so a
/// configuration is a pair of multisets: token counts per type-tree node.
struct Configuration {
  std::vector<int> sys;
  std::vector<int> env;
  bool operator==(const Configuration&) const = default;
};

struct Transfer {
  int from = 0, to = 0, count = 0;
  bool operator==(const Transfer&) const = default;
};

/// A redistribution of one player's tokens to extension-order descendants.
/// No transfers means pass, which is always legal.
struct Move {
  Player player;
  std::vector<Transfer> transfers;
  bool is_pass() const { return transfers.empty(); }
};

struct GameCaps {
  std::size_t max_vertices = 5'000'000;
};

struct GameStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t iterations = 0;
};

/// The token game for a fixed (n_S, n_E): vertices are (configuration, turn),
/// play alternates starting with Environment, and a vertex is accepting when
/// its thresholded counts lie in Acc (in both turn variants; plays stabilize,
/// so the objective reduces to the limit configuration being accepting).
///
/// The vertex set is materialized eagerly (guarded by caps); per-vertex move
/// enumeration is materialized lazily during solving.
class TokenGame {
 public:
  TokenGame(const TypeSpace& ts, const AcceptanceSet& acc, int n_s, int n_e,
            GameCaps caps = {});

  const TypeSpace& typespace() const { return ts_; }
  int n_sys() const { return n_s_; }
  int n_env() const { return n_e_; }

  std::size_t num_configs() const { return configs_.size(); }
  std::size_t num_vertices() const { return configs_.size() * 2; }
  std::size_t initial_vertex() const;  // all tokens on the roots, Environment turn

  Player turn(std::size_t v) const {
    return v % 2 == 0 ? Player::Environment : Player::System;
  }
  const Configuration& config(std::size_t v) const { return configs_[v / 2]; }
  bool accepting(std::size_t v) const { return accepting_[v / 2]; }

  std::size_t vertex_of(const Configuration& c, Player turn) const;

  /// Successor vertices under all legal moves of turn(v)'s player, pass
  /// first; deterministic order, cached after first use.
  const std::vector<std::size_t>& successors(std::size_t v) const;

  /// A witness redistribution realizing the edge v -> succ.
  Move move_between(std::size_t v, std::size_t succ) const;

  /// Sum of token heights; strict moves strictly decrease it.
  long long potential(const Configuration& c) const;

  std::size_t edge_count() const;  // forces all successor lists

  std::string config_key(const Configuration& c) const;  // sorted player:type:count

 private:
  void enumerate_player_moves(
      Player p, const std::vector<int>& counts,
      const std::function<void(const std::vector<int>&,
                               const std::vector<Transfer>&)>& emit) const;

  const TypeSpace& ts_;
  const AcceptanceSet& acc_;
  int n_s_, n_e_;
  std::vector<std::vector<int>> descendants_sys_;  // self first, then below
  std::vector<std::vector<int>> descendants_env_;
  std::vector<Configuration> configs_;
  std::vector<bool> accepting_;
  std::unordered_map<std::string, std::size_t> config_index_;
  mutable std::vector<std::vector<std::size_t>> succ_cache_;
  mutable std::vector<bool> succ_ready_;
};

/// Winning regions and a positional System strategy for the Büchi objective
/// "accepting vertices visited infinitely often".
struct SolveResult {
  std::vector<bool> system_wins;          // per vertex
  std::vector<std::size_t> strategy_succ; // per System-turn winning vertex
  std::vector<int> rank;                  // attractor rank within the region
  GameStats stats;
};

/// Classical Büchi fixpoint: attract to the accepting set, prune accepting
/// vertices from which re-entry cannot be forced, iterate.
SolveResult solve_buchi(const TokenGame& game);

/// Independent oracle: backward induction over configurations in increasing
/// descent-potential order (sound because every strict move walks down a
/// finite tree, so plays stabilize).
std::vector<bool> solve_descent(const TokenGame& game);

/// The stored positional move at a winning System-turn vertex.
Move extract_strategy(const TokenGame& game, const SolveResult& result,
                      std::size_t vertex);

}  // namespace prefsynt
