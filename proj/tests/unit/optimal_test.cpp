#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wordle/optimal.hpp"

using namespace wordle;
using wordle::testing::brute_force_optimal;
using wordle::testing::lex;
using wordle::testing::OracleMode;

namespace {

struct Toy {
  std::vector<std::string> solutions;
  std::vector<std::string> guesses;
};

Toy random_toy(std::mt19937& rng, int trial) {
  const std::size_t n = 3 + static_cast<std::size_t>(trial) % 10;
  const std::size_t extra = static_cast<std::size_t>(trial) % 4;
  const auto pool = wordle::testing::random_words(rng, n + extra, 3, "abcd");
  Toy t;
  t.solutions.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
  t.guesses = pool;
  std::shuffle(t.guesses.begin(), t.guesses.end(), rng);
  return t;
}

}  // namespace

TEST(LowerBound, SmallCases) {
  EXPECT_EQ(lower_bound(1, 0), 1u);
  EXPECT_EQ(lower_bound(1, 5), 1u);
  EXPECT_EQ(lower_bound(2, 1), 3u);
  EXPECT_EQ(lower_bound(2, 4), 3u);
  EXPECT_EQ(lower_bound(5, 2), 1u + 2 * 2 + 3 * 2);
  EXPECT_EQ(lower_bound(5, 10), 1u + 2 * 4);
}

TEST(Optimal, SingleWord) {
  const Lexicon one = lex({"abc"});
  const OptimalResult r = optimal_tree(one, one, {});
  EXPECT_EQ(r.report.total_guesses, 1u);
  EXPECT_EQ(r.report.max_guesses, 1);
  EXPECT_TRUE(r.exact);
}

TEST(Optimal, SolutionsMustBeGuesses) {
  EXPECT_THROW(optimal_tree(lex({"abc", "abd"}), lex({"abc"}), {}), SearchInfeasible);
}

TEST(Optimal, DepthBoundInfeasible) {
  const Lexicon two = lex({"abc", "abd"});
  SearchConfig c;
  c.max_depth = 1;
  EXPECT_THROW(optimal_tree(two, two, c), SearchInfeasible);
  c.max_depth = 2;
  EXPECT_EQ(optimal_tree(two, two, c).report.total_guesses, 3u);
}

TEST(Optimal, MatchesBruteForce) {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const Toy toy = random_toy(rng, trial);
    const Lexicon sols = lex(toy.solutions);
    const Lexicon guesses = lex(toy.guesses);
    for (Mode mode : {Mode::regular, Mode::superhard}) {
      const auto oracle =
          brute_force_optimal(toy.solutions, toy.guesses, mode == Mode::regular ? OracleMode::regular : OracleMode::superhard);
      SearchConfig c;
      c.mode = mode;
      const OptimalResult r = optimal_tree(sols, guesses, c);
      EXPECT_EQ(r.report.total_guesses, oracle.total) << "trial " << trial << " " << to_string(mode);
      EXPECT_EQ(r.report.max_guesses, oracle.depth) << "trial " << trial;
      EXPECT_EQ(r.tree.root.guess.str(), oracle.root) << "trial " << trial;
    }
  }
}

TEST(Optimal, MemoDoesNotChangeTheTree) {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const Toy toy = random_toy(rng, trial);
    const Lexicon sols = lex(toy.solutions);
    const Lexicon guesses = lex(toy.guesses);
    for (Mode mode : {Mode::regular, Mode::hard, Mode::superhard}) {
      SearchConfig on, off;
      on.mode = off.mode = mode;
      off.memo = false;
      EXPECT_EQ(serialize_tree(optimal_tree(sols, guesses, on).tree),
                serialize_tree(optimal_tree(sols, guesses, off).tree));
    }
  }
}

TEST(Optimal, BoundAdmissibleAndBeatsGreedy) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Toy toy = random_toy(rng, trial);
    const Game game(lex(toy.solutions), lex(toy.guesses));
    for (Mode mode : {Mode::regular, Mode::hard, Mode::superhard}) {
      SearchConfig c;
      c.mode = mode;
      const OptimalResult r = optimal_tree(game, c);
      EXPECT_LE(lower_bound(game, game.all_solutions(), game.all_guesses()), r.report.total_guesses);
      EXPECT_EQ(evaluate(r.tree, game.solutions()).total_guesses, r.report.total_guesses);
      for (HeuristicId id : kAllHeuristics) {
        const StrategyTree greedy = build_tree(game, {id, std::nullopt}, mode);
        EXPECT_LE(r.report.total_guesses, evaluate(greedy, game.solutions()).total_guesses)
            << to_string(id) << " trial " << trial;
      }
    }
  }
}

TEST(Optimal, CapIsFlaggedAndNeverBetter) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    const Toy toy = random_toy(rng, trial + 5);
    const Lexicon sols = lex(toy.solutions);
    const Lexicon guesses = lex(toy.guesses);
    SearchConfig exact, capped;
    capped.cap = 2;
    const OptimalResult a = optimal_tree(sols, guesses, exact);
    const OptimalResult b = optimal_tree(sols, guesses, capped);
    EXPECT_TRUE(a.exact);
    EXPECT_FALSE(b.exact);
    EXPECT_LE(a.report.total_guesses, b.report.total_guesses);
  }
}
