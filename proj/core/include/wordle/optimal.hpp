#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "wordle/game.hpp"
#include "wordle/strategy.hpp"

namespace wordle {

struct SearchConfig {
  Mode mode = Mode::superhard;
  int max_depth = 0;      // 0: unbounded
  std::size_t cap = 0;    // guesses tried per node, 0: all (exact)
  bool memo = true;
};

struct OptimalResult {
  StrategyTree tree;
  EvalReport report;
  bool exact = true;
  std::uint64_t nodes_searched = 0;
};

class SearchInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimum total-guesses strategy by exhaustive search. Ties go to the
/// smaller maximum depth, then to the guess earliest in the guess list.
/// Requires every solution to be in the guess list. Only practical for
/// small lists; with a cap the result is a bounded, non-exact search.
/// Throws SearchInfeasible when no strategy fits within max_depth.
OptimalResult optimal_tree(const Game& game, const SearchConfig& config);
OptimalResult optimal_tree(const Lexicon& solutions, const Lexicon& guesses, const SearchConfig& config);

/// Admissible bound on the total guesses needed for `candidates` words when
/// one guess yields at most `max_bins` non-winning responses: one word on
/// guess 1, at most `max_bins` on guess 2, the rest on guess 3 or later.
std::uint64_t lower_bound(std::size_t candidates, std::size_t max_bins);

/// Same bound with `max_bins` measured over the allowed guesses.
std::uint64_t lower_bound(const Game& game, std::span<const std::uint32_t> candidates,
                          std::span<const std::uint32_t> allowed);

}  // namespace wordle
