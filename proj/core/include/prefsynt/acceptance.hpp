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

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "prefsynt/dataword.hpp"
#include "prefsynt/typespace.hpp"

namespace prefsynt {

/// A k-counting function: per tagged type, a count in {0, .., k-1, TOP},
/// where TOP ("at least k") is stored as the value k.
class CountingFunction {
 public:
  CountingFunction(int k, int slots) : k_(k), values_(slots, 0) {}

  int k() const { return k_; }
  int slots() const { return static_cast<int>(values_.size()); }
  int value(int slot) const { return values_[slot]; }
  bool is_top(int slot) const { return values_[slot] == k_; }
  void set(int slot, int v);

  /// 4 bits per slot; requires slots <= 16 and k <= 15.
  std::uint64_t packed() const;

  bool operator==(const CountingFunction&) const = default;

 private:
  int k_;
  std::vector<int> values_;
};

/// Clamps exact class counts at the threshold k.
CountingFunction threshold_counts(const TypeSpace& ts, const TaggedCounts& counts);

/// A concrete data word realizing c: for each tagged type with value v,
/// exactly v classes with the type's representative word (exactly k classes
/// for TOP). Classes are emitted in tagged-slot order, then process index.
DataWord instantiate(const CountingFunction& c, const TypeSpace& ts);

/// Whether data words with thresholded collection c satisfy f; decided by
/// model checking the canonical instantiation. Requires depth(f) <= ts.k.
bool satisfies(const CountingFunction& c, const Formula& f, const TypeSpace& ts);

/// The set Acc of counting functions whose instantiations satisfy the
/// sentence, stored extensionally with O(1) membership on packed vectors.
class AcceptanceSet {
 public:
  bool contains(const CountingFunction& c) const {
    return packed_.count(c.packed()) > 0;
  }
  bool contains_packed(std::uint64_t key) const { return packed_.count(key) > 0; }
  const std::vector<CountingFunction>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  void insert(const CountingFunction& c) {
    if (packed_.insert(c.packed()).second) members_.push_back(c);
  }

 private:
  std::unordered_set<std::uint64_t> packed_;
  std::vector<CountingFunction> members_;
};

struct EnumBudget {
  std::uint64_t max_functions = 5'000'000;
};

/// Tests all (k+1)^slots counting functions.
AcceptanceSet enumerate_acc(const Formula& f, const TypeSpace& ts,
                            const EnumBudget& budget = {});

/// The paper-facing view with untagged word types: the two per-player roots
/// share the empty word's type and are merged (TOP-absorbing addition);
/// non-empty classes already determine their player. Pairs are
/// (representative, value), System slots first.
std::vector<std::pair<std::string, int>> untagged_projection(
    const CountingFunction& c, const TypeSpace& ts);

}  // namespace prefsynt
