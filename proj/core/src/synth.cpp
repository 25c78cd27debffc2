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

#include "prefsynt/synth.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace prefsynt {

SynthInstance prepare_instance(const Formula& f, std::optional<int> k_override,
                               const BuildBudget& build,
                               const EnumBudget& enumerate) {
  int k = k_override.value_or(f.depth());
  if (k < f.depth())
    throw std::invalid_argument("instance: depth override " + std::to_string(k) +
                                " is below the formula depth " +
                                std::to_string(f.depth()));
  if (k < 1) k = 1;  // depth-0 sentences still get the trivial type space
  TypeSpace ts = build_typespace(f.alphabet(), k, build);
  AcceptanceSet acc = enumerate_acc(f, ts, enumerate);
  return SynthInstance{f, k, std::move(ts), std::move(acc)};
}

// ---------------------------------------------------------------------------
// Search

SearchResult search(const SynthInstance& inst, const SearchRegion& region,
                    GameCaps caps) {
  if (region.max_ns < 0 || region.max_ne < 0)
    throw std::invalid_argument("search: negative caps");
  std::vector<std::pair<int, int>> pairs;  // (n_s, n_e) by total, then n_s
  for (int total = 0; total <= region.max_ns + region.max_ne; ++total)
    for (int ns = 0; ns <= total; ++ns) {
      int ne = total - ns;
      if (ns <= region.max_ns && ne <= region.max_ne) pairs.emplace_back(ns, ne);
    }

  SearchResult result;
  std::vector<PairOutcome> outcomes(pairs.size());
  int jobs = std::max(1, region.jobs);

  auto solve_pair = [&](std::size_t i) {
    auto [ns, ne] = pairs[i];
    TokenGame game(inst.ts, inst.acc, ns, ne, caps);
    SolveResult solved = solve_buchi(game);
    outcomes[i] = {ns, ne, solved.system_wins[game.initial_vertex()], solved.stats};
  };

  // Waves of `jobs` pairs keep the reported winner the enumeration-order
  // minimum while still solving pairs in parallel.
  for (std::size_t base = 0; base < pairs.size() && !result.found; base += jobs) {
    std::size_t end = std::min(pairs.size(), base + jobs);
    if (jobs == 1) {
      solve_pair(base);
    } else {
      std::vector<std::thread> workers;
      for (std::size_t i = base; i < end; ++i)
        workers.emplace_back([&, i] { solve_pair(i); });
      for (auto& t : workers) t.join();
    }
    for (std::size_t i = base; i < end; ++i) {
      result.outcomes.push_back(outcomes[i]);
      if (!result.found && outcomes[i].system_wins) {
        result.found = true;
        result.n_s = outcomes[i].n_s;
        result.n_e = outcomes[i].n_e;
        break;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Cutoffs

CutoffReport cutoffs(const SynthInstance& inst, int report_ne_up_to,
                     const BuildBudget& budget) {
  CutoffReport r;
  r.k = inst.k;
  r.sys_tree_size = inst.ts.system.num_nodes();
  r.env_tree_size = inst.ts.environment.num_nodes();
  TypeTree full;
  try {
    full = build_type_tree(inst.ts.alphabet.all_letters(), inst.k, budget);
  } catch (const BudgetError& e) {
    r.full_types_available = false;
    r.unavailable_reason = e.what();
    return r;
  }
  r.full_types_available = true;
  r.types_count = full.num_nodes();
  r.h_max = full.nodes[full.root].height;

  BigInt types = r.types_count;
  r.f_e = inst.k * boost::multiprecision::pow(types, r.h_max);

  for (int ne = 0; ne <= report_ne_up_to; ++ne) {
    CutoffReport::PerNe row;
    row.n_e = ne;
    BigInt base = boost::multiprecision::pow(types, ne + 2);
    BigInt f = inst.k;  // F(-1)
    row.f_values.push_back(f);
    for (int n = 0; n <= r.h_max; ++n) {
      f = base * (f + 1) * (f + 1) + inst.k;
      row.f_values.push_back(f);
    }
    row.f_s = row.f_values.back();  // F(height of the root type)
    r.per_ne.push_back(std::move(row));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Scripts

EnvScript parse_script(const std::string& text) {
  EnvScript script;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    ScriptRound round;
    if (tokens.size() == 1 && tokens[0] == "pass") {
      script.push_back(round);
      continue;
    }
    if (tokens.size() % 2 != 0)
      throw std::invalid_argument("script line " + std::to_string(lineno) +
                                  ": expected '<action> <process>' pairs or 'pass'");
    for (std::size_t i = 0; i < tokens.size(); i += 2)
      round.push_back({tokens[i], tokens[i + 1]});
    script.push_back(std::move(round));
  }
  return script;
}

EnvScript random_script(const SynthInstance& inst, int n_e, std::uint64_t seed,
                        int max_extensions) {
  const auto& letters = inst.ts.alphabet.letters(Player::Environment);
  EnvScript script;
  if (n_e == 0 || letters.empty() || max_extensions <= 0) return script;
  std::mt19937_64 rng(seed);
  int budget = std::uniform_int_distribution<int>(0, max_extensions)(rng);
  while (budget > 0) {
    int in_round = std::uniform_int_distribution<int>(0, std::min(budget, 2))(rng);
    ScriptRound round;
    for (int i = 0; i < in_round; ++i) {
      const std::string& a =
          letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
      int p = std::uniform_int_distribution<int>(1, n_e)(rng);
      round.push_back({a, "p" + std::to_string(p)});
    }
    budget -= in_round;
    script.push_back(std::move(round));
    if (in_round == 0) break;  // a scripted pass ends the interaction early
  }
  return script;
}

// ---------------------------------------------------------------------------
// Playout

namespace {

struct ProcState {
  std::string id;
  Player player;
  Word word;
  int node;
};

class PlayoutDriver {
 public:
  PlayoutDriver(const SynthInstance& inst, const TokenGame& game,
                std::function<Move(std::size_t)> move_at, PlayoutOptions opts)
      : inst_(inst), game_(game), move_at_(std::move(move_at)), opts_(opts) {
    config_.sys.assign(inst_.ts.system.num_nodes(), 0);
    config_.env.assign(inst_.ts.environment.num_nodes(), 0);
    for (int i = 1; i <= game_.n_env(); ++i) {
      procs_.push_back({"p" + std::to_string(i), Player::Environment, {},
                        inst_.ts.environment.root});
      config_.env[inst_.ts.environment.root]++;
    }
    for (int i = 1; i <= game_.n_sys(); ++i) {
      procs_.push_back({"q" + std::to_string(i), Player::System, {},
                        inst_.ts.system.root});
      config_.sys[inst_.ts.system.root]++;
    }
  }

  void apply_env_event(const Event& ev) {
    if (inst_.ts.alphabet.player_of(ev.action) != Player::Environment)
      throw std::invalid_argument("playout: '" + ev.action +
                                  "' is not an Environment action");
    ProcState* p = find_proc(ev.process);
    if (p == nullptr || p->player != Player::Environment)
      throw std::invalid_argument("playout: '" + ev.process +
                                  "' is not an Environment process");
    events_.push_back(ev);
    p->word.push_back(ev.action);
    int node = inst_.ts.environment.classify(p->word);
    if (node != p->node) {
      config_.env[p->node]--;
      config_.env[node]++;
      p->node = node;
    }
  }

  // Returns the System move applied (pass when no transfers).
  Move system_response(std::vector<Event>* emitted) {
    std::size_t v = game_.vertex_of(config_, Player::System);
    Move move = move_at_(v);
    std::vector<bool> moved(procs_.size(), false);
    for (const Transfer& tr : move.transfers) {
      for (int c = 0; c < tr.count; ++c) {
        ProcState* p = pick_sys_proc(tr.from, moved);
        Word suffix = realize_extension(inst_.ts, Player::System, p->word, tr.to);
        for (const auto& a : suffix) {
          events_.push_back({a, p->id});
          if (emitted) emitted->push_back({a, p->id});
          p->word.push_back(a);
        }
        config_.sys[p->node]--;
        config_.sys[tr.to]++;
        p->node = tr.to;
      }
    }
    return move;
  }

  DataWord current_word() const {
    std::vector<ProcessDecl> decls;
    for (const ProcState& p : procs_) decls.push_back({p.id, p.player});
    return DataWord(inst_.ts.alphabet, decls, events_);
  }

  // The mirrored vertex must match the word's tagged collection exactly.
  void check_mirror() const {
    TaggedCounts counts = tagged_collection(inst_.ts, current_word());
    for (int n = 0; n < static_cast<int>(config_.sys.size()); ++n)
      if (counts[inst_.ts.tagged_slot(Player::System, n)] != config_.sys[n])
        throw std::logic_error("playout: mirrored System counts diverged");
    for (int n = 0; n < static_cast<int>(config_.env.size()); ++n)
      if (counts[inst_.ts.tagged_slot(Player::Environment, n)] != config_.env[n])
        throw std::logic_error("playout: mirrored Environment counts diverged");
  }

  const Configuration& config() const { return config_; }
  const TokenGame& game() const { return game_; }
  PlayoutOptions options() const { return opts_; }

 private:
  ProcState* find_proc(const std::string& id) {
    for (ProcState& p : procs_)
      if (p.id == id) return &p;
    return nullptr;
  }

  ProcState* pick_sys_proc(int node, std::vector<bool>& moved) {
    for (std::size_t i = 0; i < procs_.size(); ++i) {
      if (procs_[i].player != Player::System || moved[i]) continue;
      if (procs_[i].node == node) {
        moved[i] = true;
        return &procs_[i];
      }
    }
    throw std::logic_error("playout: no unmoved System process at source type");
  }

  const SynthInstance& inst_;
  const TokenGame& game_;
  std::function<Move(std::size_t)> move_at_;
  PlayoutOptions opts_;
  std::vector<ProcState> procs_;
  std::vector<Event> events_;
  Configuration config_;
};

std::string describe_events(const std::vector<Event>& evs) {
  if (evs.empty()) return "pass";
  std::string s;
  for (std::size_t i = 0; i < evs.size(); ++i) {
    if (i) s += ' ';
    s += evs[i].action + " " + evs[i].process;
  }
  return s;
}

Playout run_playout(const SynthInstance& inst, const TokenGame& game,
                    std::function<Move(std::size_t)> move_at,
                    const EnvScript& script, PlayoutOptions opts) {
  PlayoutDriver driver(inst, game, std::move(move_at), opts);
  Playout out{driver.current_word(), false, 0, {}, {}};
  std::size_t next_round = 0;
  while (true) {
    if (out.rounds >= opts.max_rounds)
      throw BudgetError("playout: exceeded " + std::to_string(opts.max_rounds) +
                        " rounds");
    ScriptRound env_round =
        next_round < script.size() ? script[next_round] : ScriptRound{};
    bool scripted = next_round < script.size();
    ++next_round;
    for (const Event& ev : env_round) driver.apply_env_event(ev);
    out.transcript.push_back("env: " + describe_events(env_round));

    std::vector<Event> emitted;
    Move move = driver.system_response(&emitted);
    out.transcript.push_back("sys: " + describe_events(emitted));
    driver.check_mirror();
    ++out.rounds;
    if (!scripted && env_round.empty() && move.is_pass()) break;
  }
  out.word = driver.current_word();
  out.final_config = driver.config();
  out.satisfied = evaluate(inst.formula, out.word);
  return out;
}

}  // namespace

Playout playout(const SynthInstance& inst, const TokenGame& game,
                const SolveResult& solved, const EnvScript& script,
                PlayoutOptions opts) {
  if (!solved.system_wins[game.initial_vertex()])
    throw std::invalid_argument("playout: the initial vertex is not winning for "
                                "System");
  return run_playout(inst, game,
                     [&](std::size_t v) { return extract_strategy(game, solved, v); },
                     script, opts);
}

Playout playout(const SynthInstance& inst, const TokenGame& game,
                const std::unordered_map<std::string, Move>& strategy,
                const EnvScript& script, PlayoutOptions opts) {
  auto move_at = [&](std::size_t v) -> Move {
    auto it = strategy.find(game.config_key(game.config(v)));
    if (it == strategy.end())
      throw std::invalid_argument("playout: stored strategy has no move for "
                                  "configuration '" +
                                  game.config_key(game.config(v)) + "'");
    return it->second;
  };
  return run_playout(inst, game, move_at, script, opts);
}

Playout interactive_play(const SynthInstance& inst, const TokenGame& game,
                         const SolveResult& solved, std::istream& in,
                         std::ostream& out, PlayoutOptions opts) {
  if (!solved.system_wins[game.initial_vertex()])
    throw std::invalid_argument("playout: the initial vertex is not winning for "
                                "System");
  PlayoutDriver driver(
      inst, game, [&](std::size_t v) { return extract_strategy(game, solved, v); },
      opts);
  Playout result{driver.current_word(), false, 0, {}, {}};

  auto show_state = [&]() {
    const Configuration& c = driver.config();
    out << "  counts:";
    for (int n = 0; n < static_cast<int>(c.sys.size()); ++n)
      if (c.sys[n] > 0)
        out << " S[" << word_to_string(inst.ts.system.nodes[n].representative)
            << "]=" << c.sys[n];
    for (int n = 0; n < static_cast<int>(c.env.size()); ++n)
      if (c.env[n] > 0)
        out << " E[" << word_to_string(inst.ts.environment.nodes[n].representative)
            << "]=" << c.env[n];
    out << (game.accepting(game.vertex_of(c, Player::Environment)) ? " (accepting)"
                                                                   : " (rejecting)")
        << '\n';
  };

  std::string line;
  bool quiesce = false;
  while (!quiesce) {
    if (result.rounds >= opts.max_rounds)
      throw BudgetError("playout: exceeded round budget");
    out << "env> " << std::flush;
    if (!std::getline(in, line)) {
      quiesce = true;  // EOF plays as pass
    } else {
      std::istringstream ls(line);
      std::string a, p, extra;
      if (!(ls >> a)) continue;  // blank line: re-prompt
      if (a == "pass") {
        quiesce = true;
      } else if (!(ls >> p) || (ls >> extra)) {
        out << "  malformed input, expected '<action> <process>' or 'pass'\n";
        continue;
      } else {
        try {
          driver.apply_env_event({a, p});
        } catch (const std::invalid_argument& e) {
          out << "  rejected: " << e.what() << '\n';
          continue;
        }
      }
    }
    std::vector<Event> emitted;
    Move move = driver.system_response(&emitted);
    driver.check_mirror();
    ++result.rounds;
    out << "sys: " << describe_events(emitted) << '\n';
    show_state();
    if (quiesce) {
      // System finishes on its own until it passes
      while (!move.is_pass()) {
        emitted.clear();
        move = driver.system_response(&emitted);
        ++result.rounds;
        out << "sys: " << describe_events(emitted) << '\n';
      }
    }
  }
  result.word = driver.current_word();
  result.final_config = driver.config();
  result.satisfied = evaluate(inst.formula, result.word);
  out << "verdict: " << (result.satisfied ? "satisfied" : "violated") << '\n';
  return result;
}

// ---------------------------------------------------------------------------
// Strategy files

nlohmann::json strategy_to_json(const SynthInstance& inst, const TokenGame& game,
                                const SolveResult& solved) {
  nlohmann::json j;
  j["formula"] = inst.formula.to_string();
  j["k"] = inst.k;
  j["ns"] = game.n_sys();
  j["ne"] = game.n_env();
  j["sigma_s"] = inst.ts.alphabet.letters(Player::System);
  j["sigma_e"] = inst.ts.alphabet.letters(Player::Environment);
  j["winner"] =
      solved.system_wins[game.initial_vertex()] ? "System" : "Environment";
  nlohmann::json moves = nlohmann::json::object();
  for (std::size_t v = 1; v < game.num_vertices(); v += 2) {
    if (!solved.system_wins[v]) continue;
    Move m = extract_strategy(game, solved, v);
    nlohmann::json transfers = nlohmann::json::array();
    for (const Transfer& t : m.transfers) {
      transfers.push_back(
          {{"from", t.from},
           {"to", t.to},
           {"count", t.count},
           {"from_rep",
            word_to_string(inst.ts.system.nodes[t.from].representative)},
           {"to_rep", word_to_string(inst.ts.system.nodes[t.to].representative)}});
    }
    moves[game.config_key(game.config(v))] = {{"transfers", transfers}};
  }
  j["strategy"] = std::move(moves);
  return j;
}

std::unordered_map<std::string, Move> strategy_from_json(const nlohmann::json& j,
                                                         const TokenGame& game) {
  std::unordered_map<std::string, Move> out;
  int m_s = game.typespace().system.num_nodes();
  for (const auto& [key, desc] : j.at("strategy").items()) {
    Move move{Player::System, {}};
    for (const auto& t : desc.at("transfers")) {
      Transfer tr{t.at("from").get<int>(), t.at("to").get<int>(),
                  t.at("count").get<int>()};
      if (tr.from < 0 || tr.from >= m_s || tr.to < 0 || tr.to >= m_s ||
          tr.count <= 0)
        throw std::invalid_argument("strategy file: malformed transfer");
      move.transfers.push_back(tr);
    }
    out.emplace(key, std::move(move));
  }
  return out;
}

}  // namespace prefsynt
