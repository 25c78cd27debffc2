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

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "prefsynt/alphabet.hpp"
#include "prefsynt/logic.hpp"

namespace prefsynt {

struct ProcessDecl {
  std::string id;
  Player player;
  bool operator==(const ProcessDecl&) const = default;
};

struct Event {
  std::string action;
  std::string process;
  bool operator==(const Event&) const = default;
};

/// A finite data word, doubling as a finite logical structure: one element
/// per declared process and one per event position. ~ groups a process
/// element with all its positions; < orders positions only.
class DataWord {
 public:
  DataWord(Alphabet alphabet, std::vector<ProcessDecl> processes,
           std::vector<Event> events);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<ProcessDecl>& processes() const { return processes_; }
  const std::vector<Event>& events() const { return events_; }

  // Structure view. Elements 0..P-1 are process elements in declaration
  // order; elements P..P+N-1 are positions in word order.
  int universe_size() const { return num_processes() + num_events(); }
  int num_processes() const { return static_cast<int>(processes_.size()); }
  int num_events() const { return static_cast<int>(events_.size()); }
  bool is_process_element(int e) const { return e < num_processes(); }
  /// Class of an element = index of its process.
  int class_of(int e) const {
    return is_process_element(e) ? e : event_class_[e - num_processes()];
  }
  /// Letter of a position element; empty for process elements.
  const std::string& letter_of(int e) const;
  /// Position order; -1 for process elements (so < is false on them).
  int position_of(int e) const { return is_process_element(e) ? -1 : e - num_processes(); }
  Player player_of_element(int e) const;

  int process_index(const std::string& id) const;  // -1 if undeclared

  // line-oriented text: "proc <id> S|E" headers, "<action> <id>" events,
  // '#' comments
  static DataWord from_text(const std::string& text, const Alphabet& alphabet);
  std::string to_text() const;
  static DataWord from_json(const nlohmann::json& j, const Alphabet& alphabet);
  nlohmann::json to_json() const;

  bool operator==(const DataWord&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<ProcessDecl> processes_;
  std::vector<Event> events_;
  std::vector<int> event_class_;  // per event: process index
};

/// Truth of a sentence on a finite data word, by recursive assignment
/// extension. Requires f.alphabet() == w.alphabet().
bool evaluate(const Formula& f, const DataWord& w);

/// Per-process action subsequences, including empty classes.
std::map<std::string, Word> classes(const DataWord& w);

/// True iff w2 permutes w1's events preserving every per-process class and
/// the process declarations.
bool reorder_equivalent(const DataWord& w1, const DataWord& w2);

}  // namespace prefsynt
