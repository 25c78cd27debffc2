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

#include "prefsynt/acceptance.hpp"

#include <cmath>
#include <string>

namespace prefsynt {

void CountingFunction::set(int slot, int v) {
  if (v < 0 || v > k_)
    throw std::invalid_argument("counting function: value out of range");
  values_[slot] = v;
}

std::uint64_t CountingFunction::packed() const {
  if (values_.size() > 16 || k_ > 15)
    throw BudgetError("counting function: too wide to pack (" +
                      std::to_string(values_.size()) + " slots, k=" +
                      std::to_string(k_) + ")");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    key |= static_cast<std::uint64_t>(values_[i]) << (4 * i);
  return key;
}

CountingFunction threshold_counts(const TypeSpace& ts, const TaggedCounts& counts) {
  CountingFunction c(ts.k, ts.tagged_count());
  for (int slot = 0; slot < ts.tagged_count(); ++slot)
    c.set(slot, static_cast<int>(std::min<long long>(counts[slot], ts.k)));
  return c;
}

DataWord instantiate(const CountingFunction& c, const TypeSpace& ts) {
  if (c.slots() != ts.tagged_count() || c.k() != ts.k)
    throw std::invalid_argument("instantiate: counting function does not match "
                                "this type space");
  std::vector<ProcessDecl> procs;
  std::vector<Event> events;
  int next_id = 1;
  for (int slot = 0; slot < c.slots(); ++slot) {
    auto [player, node] = ts.slot_info(slot);
    const Word& rep = ts.tree(player).nodes[node].representative;
    int copies = c.value(slot);  // TOP instantiates exactly k classes
    for (int i = 0; i < copies; ++i) {
      std::string id = "p" + std::to_string(next_id++);
      procs.push_back({id, player});
      for (const auto& a : rep) events.push_back({a, id});
    }
  }
  return DataWord(ts.alphabet, std::move(procs), std::move(events));
}

bool satisfies(const CountingFunction& c, const Formula& f, const TypeSpace& ts) {
  if (f.depth() > ts.k)
    throw std::invalid_argument("satisfies: formula depth " +
                                std::to_string(f.depth()) +
                                " exceeds type space depth " + std::to_string(ts.k));
  return evaluate(f, instantiate(c, ts));
}

AcceptanceSet enumerate_acc(const Formula& f, const TypeSpace& ts,
                            const EnumBudget& budget) {
  int slots = ts.tagged_count();
  double total = std::pow(ts.k + 1, slots);
  if (slots > 16 || total > static_cast<double>(budget.max_functions))
    throw BudgetError("acceptance enumeration: (k+1)^slots = " +
                      std::to_string(total) + " exceeds budget");
  AcceptanceSet acc;
  CountingFunction c(ts.k, slots);
  // odometer over all functions
  while (true) {
    if (satisfies(c, f, ts)) acc.insert(c);
    int i = 0;
    for (; i < slots; ++i) {
      if (c.value(i) < ts.k) {
        c.set(i, c.value(i) + 1);
        break;
      }
      c.set(i, 0);
    }
    if (i == slots) break;
  }
  return acc;
}

std::vector<std::pair<std::string, int>> untagged_projection(
    const CountingFunction& c, const TypeSpace& ts) {
  int root_s = ts.tagged_slot(Player::System, ts.system.root);
  int root_e = ts.tagged_slot(Player::Environment, ts.environment.root);
  auto absorb = [&](int a, int b) {
    return (a == c.k() || b == c.k() || a + b >= c.k()) ? c.k() : a + b;
  };
  std::vector<std::pair<std::string, int>> out;
  out.emplace_back("", absorb(c.value(root_s), c.value(root_e)));
  for (int slot = 0; slot < c.slots(); ++slot) {
    if (slot == root_s || slot == root_e) continue;
    auto [player, node] = ts.slot_info(slot);
    out.emplace_back(word_to_string(ts.tree(player).nodes[node].representative),
                     c.value(slot));
  }
  return out;
}

}  // namespace prefsynt
