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

#include "prefsynt/dataword.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace prefsynt {

DataWord::DataWord(Alphabet alphabet, std::vector<ProcessDecl> processes,
                   std::vector<Event> events)
    : alphabet_(std::move(alphabet)), processes_(std::move(processes)),
      events_(std::move(events)) {
  std::map<std::string, int> index;
  for (int i = 0; i < num_processes(); ++i) {
    if (!index.emplace(processes_[i].id, i).second)
      throw std::invalid_argument("data word: duplicate process id '" +
                                  processes_[i].id + "'");
  }
  event_class_.reserve(events_.size());
  for (const Event& ev : events_) {
    auto it = index.find(ev.process);
    if (it == index.end())
      throw std::invalid_argument("data word: event on undeclared process '" +
                                  ev.process + "'");
    Player lp = alphabet_.player_of(ev.action);  // throws on unknown action
    if (lp != processes_[it->second].player)
      throw std::invalid_argument("data word: action '" + ev.action +
                                  "' on wrong-player process '" + ev.process + "'");
    event_class_.push_back(it->second);
  }
}

const std::string& DataWord::letter_of(int e) const {
  static const std::string empty;
  return is_process_element(e) ? empty : events_[e - num_processes()].action;
}

Player DataWord::player_of_element(int e) const {
  return processes_[class_of(e)].player;
}

int DataWord::process_index(const std::string& id) const {
  for (int i = 0; i < num_processes(); ++i)
    if (processes_[i].id == id) return i;
  return -1;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const Formula& f, const DataWord& w)
      : f_(f), w_(w), assign_(f.num_variables(), -1) {}

  bool run() { return eval(f_.root()); }

 private:
  bool eval(int id) {
    const FormulaNode& n = f_.node(id);
    switch (n.kind) {
      case NodeKind::Equal:
        return assign_[n.lhs] == assign_[n.rhs];
      case NodeKind::ProcS:
        return w_.is_process_element(assign_[n.var]) &&
               w_.player_of_element(assign_[n.var]) == Player::System;
      case NodeKind::ProcE:
        return w_.is_process_element(assign_[n.var]) &&
               w_.player_of_element(assign_[n.var]) == Player::Environment;
      case NodeKind::Letter:
        return w_.letter_of(assign_[n.var]) == n.letter;
      case NodeKind::PrefLess: {
        // same class and strictly earlier; false whenever a process element
        // is involved, since < is undefined on those
        int x = assign_[n.lhs], y = assign_[n.rhs];
        if (w_.is_process_element(x) || w_.is_process_element(y)) return false;
        return w_.class_of(x) == w_.class_of(y) &&
               w_.position_of(x) < w_.position_of(y);
      }
      case NodeKind::SameClass:
        return w_.class_of(assign_[n.lhs]) == w_.class_of(assign_[n.rhs]);
      case NodeKind::Not:
        return !eval(n.lhs);
      case NodeKind::And:
        return eval(n.lhs) && eval(n.rhs);
      case NodeKind::Or:
        return eval(n.lhs) || eval(n.rhs);
      case NodeKind::Implies:
        return !eval(n.lhs) || eval(n.rhs);
      case NodeKind::Iff:
        return eval(n.lhs) == eval(n.rhs);
      case NodeKind::ExistsProc:
        for (int e = 0; e < w_.num_processes(); ++e)
          if (try_witness(n, e)) return true;
        return false;
      case NodeKind::ExistsBound:
        for (int e = w_.num_processes(); e < w_.universe_size(); ++e) {
          bool blocked = false;
          for (int g : n.guards)
            if (w_.class_of(e) == w_.class_of(assign_[g])) { blocked = true; break; }
          if (!blocked && try_witness(n, e)) return true;
        }
        return false;
      case NodeKind::ExistsPref: {
        int b = assign_[f_.variable(n.var).under];
        for (int e = w_.num_processes(); e < w_.universe_size(); ++e) {
          if (w_.class_of(e) != w_.class_of(b)) continue;
          if (w_.position_of(e) >= w_.position_of(b)) continue;
          if (try_witness(n, e)) return true;
        }
        return false;
      }
    }
    return false;
  }

  bool try_witness(const FormulaNode& n, int element) {
    assign_[n.var] = element;
    bool ok = eval(n.lhs);
    assign_[n.var] = -1;
    return ok;
  }

  const Formula& f_;
  const DataWord& w_;
  std::vector<int> assign_;
};

}  // namespace

bool evaluate(const Formula& f, const DataWord& w) {
  if (!(f.alphabet() == w.alphabet()))
    throw std::invalid_argument("evaluate: formula and data word alphabets differ");
  return Evaluator(f, w).run();
}

std::map<std::string, Word> classes(const DataWord& w) {
  std::map<std::string, Word> out;
  for (const ProcessDecl& p : w.processes()) out[p.id] = {};
  for (const Event& ev : w.events()) out[ev.process].push_back(ev.action);
  return out;
}

bool reorder_equivalent(const DataWord& w1, const DataWord& w2) {
  if (!(w1.alphabet() == w2.alphabet())) return false;
  auto decls = [](const DataWord& w) {
    std::map<std::string, Player> m;
    for (const ProcessDecl& p : w.processes()) m[p.id] = p.player;
    return m;
  };
  return decls(w1) == decls(w2) && classes(w1) == classes(w2);
}

// ---------------------------------------------------------------------------
// I/O

DataWord DataWord::from_text(const std::string& text, const Alphabet& alphabet) {
  std::vector<ProcessDecl> procs;
  std::vector<Event> events;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string a, b, c;
    if (!(ls >> a)) continue;
    if (a == "proc") {
      if (!(ls >> b >> c) || (c != "S" && c != "E"))
        throw std::invalid_argument("data word line " + std::to_string(lineno) +
                                    ": expected 'proc <id> S|E'");
      procs.push_back({b, c == "S" ? Player::System : Player::Environment});
    } else {
      if (!(ls >> b))
        throw std::invalid_argument("data word line " + std::to_string(lineno) +
                                    ": expected '<action> <process>'");
      events.push_back({a, b});
    }
    if (ls >> c)
      throw std::invalid_argument("data word line " + std::to_string(lineno) +
                                  ": trailing tokens");
  }
  return DataWord(alphabet, std::move(procs), std::move(events));
}

std::string DataWord::to_text() const {
  std::ostringstream out;
  for (const ProcessDecl& p : processes_)
    out << "proc " << p.id << ' ' << player_char(p.player) << '\n';
  for (const Event& ev : events_) out << ev.action << ' ' << ev.process << '\n';
  return out.str();
}

DataWord DataWord::from_json(const nlohmann::json& j, const Alphabet& alphabet) {
  std::vector<ProcessDecl> procs;
  std::vector<Event> events;
  for (const auto& p : j.at("processes")) {
    std::string player = p.at("player").get<std::string>();
    if (player != "S" && player != "E")
      throw std::invalid_argument("data word json: player must be \"S\" or \"E\"");
    procs.push_back({p.at("id").get<std::string>(),
                     player == "S" ? Player::System : Player::Environment});
  }
  for (const auto& e : j.at("events"))
    events.push_back({e.at("action").get<std::string>(),
                      e.at("process").get<std::string>()});
  return DataWord(alphabet, std::move(procs), std::move(events));
}

nlohmann::json DataWord::to_json() const {
  nlohmann::json j;
  j["processes"] = nlohmann::json::array();
  for (const ProcessDecl& p : processes_)
    j["processes"].push_back({{"id", p.id},
                              {"player", std::string(1, player_char(p.player))}});
  j["events"] = nlohmann::json::array();
  for (const Event& ev : events_)
    j["events"].push_back({{"action", ev.action}, {"process", ev.process}});
  return j;
}

}  // namespace prefsynt
