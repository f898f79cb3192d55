#include "wordle/binning.hpp"

#include <algorithm>
#include <map>

namespace wordle {

Game::Game(Lexicon solutions, Lexicon guesses)
    : solutions_(std::move(solutions)), guesses_(std::move(guesses)), table_(guesses_, solutions_) {
  guess_to_solution_.assign(guesses_.size(), -1);
  solution_to_guess_.assign(solutions_.size(), -1);
  for (std::size_t g = 0; g < guesses_.size(); ++g) {
    if (auto s = solutions_.index_of(guesses_[g])) {
      guess_to_solution_[g] = static_cast<std::int32_t>(*s);
      solution_to_guess_[*s] = static_cast<std::int32_t>(g);
    }
  }
}

CandidateSet Game::all_solutions() const {
  CandidateSet out(solutions_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

GuessSet Game::all_guesses() const {
  GuessSet out(guesses_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

BinDistribution::BinDistribution(Word guess, std::vector<Bin> bins, std::size_t total)
    : guess_(std::move(guess)), bins_(std::move(bins)), total_(total) {}

std::vector<std::uint32_t> BinDistribution::sizes() const {
  std::vector<std::uint32_t> out;
  out.reserve(bins_.size());
  for (const Bin& b : bins_) out.push_back(static_cast<std::uint32_t>(b.size()));
  return out;
}

const Bin* BinDistribution::find(PatternCode pattern) const noexcept {
  auto it = std::lower_bound(bins_.begin(), bins_.end(), pattern,
                             [](const Bin& b, PatternCode p) { return b.pattern < p; });
  return it != bins_.end() && it->pattern == pattern ? &*it : nullptr;
}

const Bin& BinDistribution::largest() const {
  if (bins_.empty()) throw BinningError("distribution has no bins");
  const Bin* best = &bins_.front();
  for (const Bin& b : bins_) {
    if (b.size() > best->size()) best = &b;
  }
  return *best;
}

BinDistribution partition(const Word& guess, std::span<const Word> candidates) {
  if (candidates.empty()) throw BinningError("cannot partition an empty candidate set");
  std::map<PatternCode, std::vector<Word>> grouped;
  for (const Word& c : candidates) {
    if (c.length() != guess.length()) {
      throw BinningError("candidate '" + c.str() + "' does not match guess length");
    }
    grouped[score_code(guess.str(), c.str())].push_back(c);
  }
  std::vector<Bin> bins;
  bins.reserve(grouped.size());
  for (auto& [code, members] : grouped) bins.push_back(Bin{code, std::move(members)});
  return BinDistribution(guess, std::move(bins), candidates.size());
}

BinDistribution partition(const Game& game, std::uint32_t guess, std::span<const std::uint32_t> candidates) {
  if (candidates.empty()) throw BinningError("cannot partition an empty candidate set");
  const auto row = game.table().row(guess);
  std::map<PatternCode, std::vector<Word>> grouped;
  for (std::uint32_t s : candidates) grouped[row[s]].push_back(game.solutions()[s]);
  std::vector<Bin> bins;
  bins.reserve(grouped.size());
  for (auto& [code, members] : grouped) bins.push_back(Bin{code, std::move(members)});
  return BinDistribution(game.guesses()[guess], std::move(bins), candidates.size());
}

bool all_singletons(const BinDistribution& dist) noexcept {
  return std::all_of(dist.bins().begin(), dist.bins().end(), [](const Bin& b) { return b.size() == 1; });
}

}  // namespace wordle
