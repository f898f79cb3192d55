#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wordle/feedback.hpp"
#include "wordle/lexicon.hpp"

namespace wordle {

/// Indices into Game::solutions(), ascending (list order).
using CandidateSet = std::vector<std::uint32_t>;
/// Indices into Game::guesses(), ascending (list order).
using GuessSet = std::vector<std::uint32_t>;

/// Immutable solution and guess lists plus their pattern table. Shared by
/// every search; safe to read from several threads.
class Game {
 public:
  Game(Lexicon solutions, Lexicon guesses);

  const Lexicon& solutions() const noexcept { return solutions_; }
  const Lexicon& guesses() const noexcept { return guesses_; }
  const PatternTable& table() const noexcept { return table_; }
  int word_length() const noexcept { return solutions_.word_length(); }

  /// Solution index of guess `g`, if that guess is also a possible solution.
  std::optional<std::uint32_t> solution_of_guess(std::uint32_t g) const noexcept {
    const std::int32_t s = guess_to_solution_[g];
    if (s < 0) return std::nullopt;
    return static_cast<std::uint32_t>(s);
  }
  std::optional<std::uint32_t> guess_of_solution(std::uint32_t s) const noexcept {
    const std::int32_t g = solution_to_guess_[s];
    if (g < 0) return std::nullopt;
    return static_cast<std::uint32_t>(g);
  }

  CandidateSet all_solutions() const;
  GuessSet all_guesses() const;

 private:
  Lexicon solutions_;
  Lexicon guesses_;
  PatternTable table_;
  std::vector<std::int32_t> guess_to_solution_;
  std::vector<std::int32_t> solution_to_guess_;
};

}  // namespace wordle
