// Deterministic random generators shared across test suites.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "prefsynt/dataword.hpp"

namespace prefsynt::testsupport {

using Rng = std::mt19937_64;

inline Word random_word(Rng& rng, const std::vector<std::string>& letters,
                        int max_len) {
  Word w;
  if (letters.empty()) return w;
  int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  for (int i = 0; i < len; ++i)
    w.push_back(letters[std::uniform_int_distribution<std::size_t>(
        0, letters.size() - 1)(rng)]);
  return w;
}

inline DataWord random_dataword(Rng& rng, const Alphabet& alphabet, int max_procs,
                                int max_events) {
  int np = std::uniform_int_distribution<int>(0, max_procs)(rng);
  std::vector<ProcessDecl> procs;
  for (int i = 0; i < np; ++i) {
    bool sys = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    if (alphabet.letters(Player::System).empty()) sys = false;
    if (alphabet.letters(Player::Environment).empty()) sys = true;
    procs.push_back(
        {"p" + std::to_string(i + 1), sys ? Player::System : Player::Environment});
  }
  std::vector<Event> events;
  if (np > 0) {
    int ne = std::uniform_int_distribution<int>(0, max_events)(rng);
    for (int i = 0; i < ne; ++i) {
      const ProcessDecl& p =
          procs[std::uniform_int_distribution<int>(0, np - 1)(rng)];
      const auto& letters = alphabet.letters(p.player);
      if (letters.empty()) continue;
      events.push_back({letters[std::uniform_int_distribution<std::size_t>(
                            0, letters.size() - 1)(rng)],
                        p.id});
    }
  }
  return DataWord(alphabet, std::move(procs), std::move(events));
}

/// Random permutation of the events keeping each per-process subsequence.
inline DataWord shuffle_preserving_classes(Rng& rng, const DataWord& w) {
  auto per_class = classes(w);
  std::vector<std::pair<std::string, Word>> streams(per_class.begin(),
                                                    per_class.end());
  std::vector<std::size_t> taken(streams.size(), 0);
  std::vector<Event> events;
  std::size_t remaining = w.events().size();
  while (remaining > 0) {
    std::size_t i =
        std::uniform_int_distribution<std::size_t>(0, streams.size() - 1)(rng);
    if (taken[i] >= streams[i].second.size()) continue;
    events.push_back({streams[i].second[taken[i]], streams[i].first});
    ++taken[i];
    --remaining;
  }
  return DataWord(w.alphabet(), w.processes(), std::move(events));
}

/// All words of length <= max_len over the letters, shortest first.
inline std::vector<Word> all_words_up_to(const std::vector<std::string>& letters,
                                         int max_len) {
  std::vector<Word> out{{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i)
      for (const auto& a : letters) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    level_start = level_end;
  }
  return out;
}

}  // namespace prefsynt::testsupport
