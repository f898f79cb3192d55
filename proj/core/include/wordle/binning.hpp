#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wordle/feedback.hpp"
#include "wordle/game.hpp"
#include "wordle/lexicon.hpp"

namespace wordle {

class BinningError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Bin {
  PatternCode pattern = 0;
  std::vector<Word> members;  // candidate order

  std::size_t size() const noexcept { return members.size(); }
};

/// Candidates grouped by the pattern a guess would receive from each of
/// them. Bins are ordered by ascending pattern code.
class BinDistribution {
 public:
  BinDistribution(Word guess, std::vector<Bin> bins, std::size_t total);

  const Word& guess() const noexcept { return guess_; }
  const std::vector<Bin>& bins() const noexcept { return bins_; }
  std::size_t total() const noexcept { return total_; }
  int word_length() const noexcept { return guess_.length(); }

  /// Bin sizes in bin order.
  std::vector<std::uint32_t> sizes() const;
  const Bin* find(PatternCode pattern) const noexcept;
  /// Largest bin; the lowest pattern code wins among equals.
  const Bin& largest() const;

 private:
  Word guess_;
  std::vector<Bin> bins_;
  std::size_t total_ = 0;
};

/// Throws BinningError for an empty candidate list or mismatched lengths.
BinDistribution partition(const Word& guess, std::span<const Word> candidates);
BinDistribution partition(const Game& game, std::uint32_t guess, std::span<const std::uint32_t> candidates);

bool all_singletons(const BinDistribution& dist) noexcept;

}  // namespace wordle
