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

#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>

#include "prefsynt/acceptance.hpp"
#include "prefsynt/tokengame.hpp"

namespace prefsynt {

using BigInt = boost::multiprecision::cpp_int;

/// Everything derived from a sentence once, shared read-only by searches,
/// solves and playouts: its type space at depth k and the acceptance set.
struct SynthInstance {
  Formula formula;
  int k;
  TypeSpace ts;
  AcceptanceSet acc;
};

SynthInstance prepare_instance(const Formula& f, std::optional<int> k_override = {},
                               const BuildBudget& build = {},
                               const EnumBudget& enumerate = {});

// ---------------------------------------------------------------------------
// Search over (n_S, n_E)

struct SearchRegion {
  int max_ns = 2;
  int max_ne = 2;
  int jobs = 1;
};

struct PairOutcome {
  int n_s = 0, n_e = 0;
  bool system_wins = false;
  GameStats stats;
};

struct SearchResult {
  bool found = false;
  int n_s = -1, n_e = -1;  // first winning pair by n_S+n_E, then n_S
  std::vector<PairOutcome> outcomes;
};

/// Solves token games pair by pair, ordered by n_S+n_E then n_S, up to the
/// user caps. Finding no pair within caps is "caps exhausted", not a
/// decision: completeness would require the cutoff bounds, which are far
/// beyond enumerable scale.
SearchResult search(const SynthInstance& inst, const SearchRegion& region,
                    GameCaps caps = {});

// ---------------------------------------------------------------------------
// Cutoff bounds

/// The bounds certifying decidability, computed exactly as big integers and
/// reported only; they are never used as search loop bounds.
///   f_E = k * |Types|^h_max
///   F(-1) = k,  F(n) = |Types|^(n_E+2) * (F(n-1)+1)^2 + k
///   f_S = F(height of the root type)
/// |Types| counts depth-k types over the full alphabet (including mixed-letter
/// types no single class can realize; per-player tree sizes are reported
/// alongside for comparison).
struct CutoffReport {
  int k = 0;
  bool full_types_available = false;
  std::string unavailable_reason;
  BigInt types_count = 0;
  int h_max = 0;
  BigInt f_e = 0;
  struct PerNe {
    int n_e = 0;
    std::vector<BigInt> f_values;  // F(-1), F(0), ..., F(h_max)
    BigInt f_s = 0;
  };
  std::vector<PerNe> per_ne;
  std::size_t sys_tree_size = 0, env_tree_size = 0;
};

CutoffReport cutoffs(const SynthInstance& inst, int report_ne_up_to = 3,
                     const BuildBudget& budget = {});

// ---------------------------------------------------------------------------
// Playback of a token strategy as a data word

/// One Environment round: the events the Environment appends before handing
/// the turn over; empty means pass.
using ScriptRound = std::vector<Event>;
using EnvScript = std::vector<ScriptRound>;

EnvScript parse_script(const std::string& text);
EnvScript random_script(const SynthInstance& inst, int n_e, std::uint64_t seed,
                        int max_extensions = 6);

struct PlayoutOptions {
  int max_rounds = 200;
};

struct Playout {
  DataWord word;
  bool satisfied = false;
  int rounds = 0;
  Configuration final_config;
  std::vector<std::string> transcript;
};

/// Rounds alternate starting with Environment. Each Environment extension
/// moves the mirrored token-game vertex; the System response is the
/// positional strategy move, concretized per token by extending the
/// lowest-indexed own process at the source type with a shortest realizing
/// suffix. After the Environment quiesces, System moves are applied until
/// pass and the final data word is returned.
Playout playout(const SynthInstance& inst, const TokenGame& game,
                const SolveResult& solved, const EnvScript& script,
                PlayoutOptions opts = {});

/// Same protocol, with moves looked up in a stored strategy map
/// (configuration key -> move), as loaded from a strategy file.
Playout playout(const SynthInstance& inst, const TokenGame& game,
                const std::unordered_map<std::string, Move>& strategy,
                const EnvScript& script, PlayoutOptions opts = {});

/// REPL over playout: reads "<action> <process>" or "pass" lines; malformed
/// lines re-prompt without touching the state; "pass" (or EOF) quiesces.
Playout interactive_play(const SynthInstance& inst, const TokenGame& game,
                         const SolveResult& solved, std::istream& in,
                         std::ostream& out, PlayoutOptions opts = {});

// ---------------------------------------------------------------------------
// Strategy files

nlohmann::json strategy_to_json(const SynthInstance& inst, const TokenGame& game,
                                const SolveResult& solved);
std::unordered_map<std::string, Move> strategy_from_json(const nlohmann::json& j,
                                                         const TokenGame& game);

}  // namespace prefsynt
