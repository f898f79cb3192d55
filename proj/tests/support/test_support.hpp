#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wordle/lexicon.hpp"

namespace wordle::testing {

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(WORDLE_DATA_DIR) / name;
}

inline Lexicon lex(const std::vector<std::string>& words, std::string label = "test") {
  std::vector<Word> out;
  out.reserve(words.size());
  for (const auto& w : words) out.emplace_back(w);
  return Lexicon(std::move(out), std::move(label));
}

// Reference scorer written from the rule text: count unmatched secret
// letters, then hand them out to unmatched guess letters left to right.
// Returns "G"/"Y"/"B" text.
inline std::string reference_pattern(const std::string& guess, const std::string& secret) {
  const std::size_t n = guess.size();
  std::string out(n, 'B');
  std::map<char, int> spare;
  for (std::size_t i = 0; i < n; ++i) {
    if (guess[i] == secret[i]) {
      out[i] = 'G';
    } else {
      ++spare[secret[i]];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out[i] == 'G') continue;
    auto it = spare.find(guess[i]);
    if (it != spare.end() && it->second > 0) {
      out[i] = 'Y';
      --it->second;
    }
  }
  return out;
}

inline std::string random_word(std::mt19937& rng, int length, const std::string& alphabet) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string w;
  for (int i = 0; i < length; ++i) w.push_back(alphabet[pick(rng)]);
  return w;
}

// Distinct random words; order of first draw.
inline std::vector<std::string> random_words(std::mt19937& rng, std::size_t count, int length,
                                             const std::string& alphabet) {
  std::vector<std::string> out;
  while (out.size() < count) {
    std::string w = random_word(rng, length, alphabet);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

enum class OracleMode { regular, superhard };

struct OracleValue {
  std::uint64_t total = std::numeric_limits<std::uint64_t>::max();
  int depth = 0;
  std::string root;
  bool operator<(const OracleValue& o) const { return total != o.total ? total < o.total : depth < o.depth; }
};

// Plain exhaustive search over every strategy, no memo and no pruning.
// Cost of playing g at a node with candidates S is |S| plus the cost of each
// non-winning response bin. Guesses that cannot shrink S are skipped.
// In superhard mode a guess must agree with every response seen so far.
inline OracleValue brute_force_optimal(const std::vector<std::string>& cands, const std::vector<std::string>& guesses,
                                       OracleMode mode) {
  OracleValue best;
  const std::string win(cands.front().size(), 'G');
  for (const std::string& g : guesses) {
    std::map<std::string, std::vector<std::string>> bins;
    for (const std::string& s : cands) bins[reference_pattern(g, s)].push_back(s);
    const bool is_cand = bins.contains(win);
    if (!is_cand && bins.size() == 1) continue;
    OracleValue here{cands.size(), 1, g};
    for (const auto& [pat, members] : bins) {
      if (pat == win) continue;
      std::vector<std::string> next_guesses;
      for (const std::string& h : guesses) {
        if (mode == OracleMode::regular || reference_pattern(g, h) == pat) next_guesses.push_back(h);
      }
      const OracleValue sub = brute_force_optimal(members, next_guesses, mode);
      if (sub.total == std::numeric_limits<std::uint64_t>::max()) {
        here.total = sub.total;
        break;
      }
      here.total += sub.total;
      here.depth = std::max(here.depth, sub.depth + 1);
    }
    if (here.total == std::numeric_limits<std::uint64_t>::max()) continue;
    if (here < best) best = here;
  }
  return best;
}

}  // namespace wordle::testing
