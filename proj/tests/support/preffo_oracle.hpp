// Test-only oracle for prefix-logic equivalence on words, independent of the
// prefix game search: two words agree on all depth-k prefix sentences exactly
// when their marked prefixes (a prefix with its last position as a constant)
// realize the same depth-(k-1) first-order types on both sides. This reduces
// the prefix game to the classical game with constants.
#pragma once

#include "prefsynt/efgames.hpp"

namespace prefsynt::testsupport {

inline bool preffo_via_marked_fo(const Word& u, const Word& v, int k,
                                 GameBudget b = {}) {
  if (k <= 0) return true;
  auto covers = [&](const Word& x, const Word& y) {
    for (int n = 0; n < static_cast<int>(x.size()); ++n) {
      MarkedWord mx{Word(x.begin(), x.begin() + n + 1), {n}};
      bool matched = false;
      for (int m = 0; m < static_cast<int>(y.size()) && !matched; ++m) {
        MarkedWord my{Word(y.begin(), y.begin() + m + 1), {m}};
        matched = fo_equiv_words(mx, my, k - 1, b);
      }
      if (!matched) return false;
    }
    return true;
  };
  return covers(u, v) && covers(v, u);
}

}  // namespace prefsynt::testsupport
