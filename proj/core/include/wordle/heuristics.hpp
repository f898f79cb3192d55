#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wordle/binning.hpp"
#include "wordle/game.hpp"

namespace wordle {

/// Bin-distribution heuristics. Every heuristic is minimized.
enum class HeuristicId : std::uint8_t {
  negnumbins,
  negentropy,
  expbinsize,
  linfinity,
  negnumsingletons,
  maxsimilarity,
  maxbinsize,
  maxonediffs,
};

inline constexpr std::array kAllHeuristics = {
    HeuristicId::negnumbins,       HeuristicId::negentropy,    HeuristicId::expbinsize,
    HeuristicId::linfinity,        HeuristicId::negnumsingletons, HeuristicId::maxsimilarity,
    HeuristicId::maxbinsize,       HeuristicId::maxonediffs,
};

std::string_view to_string(HeuristicId id) noexcept;
/// Accepts the canonical names plus "expectation" (expbinsize) and
/// "similarity" (maxsimilarity); case-insensitive.
std::optional<HeuristicId> parse_heuristic(std::string_view name);

/// True for heuristics that need bin contents, not only bin sizes.
constexpr bool needs_contents(HeuristicId id) noexcept {
  return id == HeuristicId::maxsimilarity || id == HeuristicId::maxonediffs;
}

/// Exponent of the L^p norm the heuristic corresponds to ("0", "1", "2",
/// "inf", "-inf"), or empty for the content heuristics.
std::string_view norm_exponent(HeuristicId id) noexcept;

struct HeuristicSpec {
  HeuristicId primary = HeuristicId::negnumbins;
  std::optional<HeuristicId> tiebreak;

  /// "negnumbins" or "negnumbins-expbinsize".
  std::string name() const;
  friend bool operator==(const HeuristicSpec&, const HeuristicSpec&) = default;
};

/// Exact non-negative fraction; compared by cross-multiplication.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// (bin size, number of bins of that size), largest size first.
using LinfinityProfile = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// A heuristic value. Only scores of the same heuristic are comparable.
class Score {
 public:
  using Value = std::variant<std::int64_t, double, Rational, LinfinityProfile>;

  Score() = default;
  Score(HeuristicId id, Value v) : id_(id), value_(std::move(v)) {}

  HeuristicId heuristic() const noexcept { return id_; }
  const Value& value() const noexcept { return value_; }

  /// Scalar view for display; linfinity reports its largest bin size.
  double as_double() const;
  std::string str() const;

  friend bool operator<(const Score& a, const Score& b);
  friend bool operator==(const Score& a, const Score& b);

 private:
  HeuristicId id_ = HeuristicId::negnumbins;
  Value value_ = std::int64_t{0};
};

/// Scores a size-only view. Throws std::invalid_argument for heuristics that
/// need contents.
Score score_sizes(HeuristicId id, std::span<const std::uint32_t> sizes);
Score score(HeuristicId id, const BinDistribution& dist);

/// Letter/position concentration of one bin: each word drops its letter at
/// each position into a (letter, position) cell, and the result is the
/// unnormalized negentropy sum c ln c over the cell counts. A single word
/// scores 0; larger and more alike bins score higher.
double bin_similarity(std::span<const Word> bin);
/// Unordered pairs of words differing in exactly one position.
std::int64_t one_diff_pairs(std::span<const Word> bin);

/// Summary numbers shown alongside suggestions.
struct BinStats {
  std::size_t bins = 0;
  std::uint32_t max_bin = 0;
  double expected_bin = 0.0;  // sum n^2 / N
  double entropy = 0.0;       // natural log, >= 0
};
BinStats bin_stats(std::span<const std::uint32_t> sizes);

/// Evaluates guesses against one fixed candidate set using the pattern
/// table. Reuses scratch buffers between guesses; not thread-safe.
class NodeEvaluator {
 public:
  NodeEvaluator(const Game& game, std::span<const std::uint32_t> candidates);

  std::size_t candidate_count() const noexcept { return candidates_.size(); }

  /// Whether guess `g` is itself one of the remaining candidates.
  bool is_candidate(std::uint32_t g) const noexcept;

  /// Bins guess `g`; subsequent queries refer to it.
  void load(std::uint32_t g);
  std::size_t bin_count() const noexcept { return touched_.size(); }
  bool all_singletons() const noexcept { return touched_.size() == candidates_.size(); }
  std::vector<std::uint32_t> sizes() const;

  Score score(HeuristicId id);
  BinStats stats() const;

 private:
  Score max_similarity();
  Score max_one_diffs();

  const Game& game_;
  std::span<const std::uint32_t> candidates_;
  std::uint32_t loaded_ = 0;
  std::span<const PatternCode> row_;
  std::vector<std::uint32_t> counts_;   // per pattern code
  std::vector<PatternCode> touched_;    // codes with a nonzero count
  std::vector<std::uint8_t> is_candidate_;  // per solution index
  std::vector<std::uint32_t> cells_;    // similarity scratch: slot x 26L
  std::vector<std::int32_t> slot_;      // pattern code -> bin slot
  std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>> one_diff_pairs_;
  std::vector<std::uint32_t> pair_counts_;  // one-diff pairs per pattern code
  std::vector<PatternCode> pair_touched_;
};

/// The selected guess and why it won.
struct GuessChoice {
  std::uint32_t guess = 0;
  Score primary;
  bool is_candidate = false;
  bool early_stop = false;   // scanning ended at an all-singleton distribution
  std::size_t scanned = 0;   // guesses evaluated
};

/// Picks a guess from `allowed` (guess indices, list order). Selection key:
/// primary score, then preferring a guess that is still a candidate, then
/// the tie-break score, then scan position. Candidate guesses are scanned
/// before the others, each group in list order, and scanning stops once a
/// guess splits the candidates into singletons. Guesses that are not
/// candidates and leave all candidates in one bin are never selected.
/// Throws std::invalid_argument on empty inputs and std::logic_error when no
/// allowed guess makes progress.
GuessChoice choose_guess(const Game& game, std::span<const std::uint32_t> candidates,
                         std::span<const std::uint32_t> allowed, const HeuristicSpec& spec);

/// Word-level convenience: candidates and allowed guesses as word lists.
Word choose_guess(const Lexicon& candidates, const Lexicon& allowed, const HeuristicSpec& spec);

struct RankedGuess {
  std::uint32_t guess = 0;
  Score primary;
  std::optional<Score> tiebreak;
  bool is_candidate = false;
  bool after_stop = false;  // would not have been scanned by choose_guess
  BinStats stats;
};

/// Every progress-making allowed guess, ordered so that the first entry is
/// the one choose_guess picks: guesses choose_guess would have scanned come
/// first, each group sorted by the selection key.
std::vector<RankedGuess> rank_guesses(const Game& game, std::span<const std::uint32_t> candidates,
                                      std::span<const std::uint32_t> allowed, const HeuristicSpec& spec);

}  // namespace wordle
