#pragma once

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordle/heuristics.hpp"
#include "wordle/lexicon.hpp"
#include "wordle/strategy.hpp"

namespace wordle {

using Date = std::chrono::year_month_day;

class LedgerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses YYYY-MM-DD. Throws LedgerError.
Date parse_date(std::string_view text);
std::string format_date(Date d);

struct LedgerEntry {
  Date date;
  Word word;
};

/// Past daily answers, oldest first. Dates strictly increase and words are
/// distinct.
class UsedLedger {
 public:
  UsedLedger() = default;
  explicit UsedLedger(std::vector<LedgerEntry> entries);

  const std::vector<LedgerEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Words dated on or before `as_of`.
  std::vector<Word> used_through(Date as_of) const;

 private:
  std::vector<LedgerEntry> entries_;
};

/// One "YYYY-MM-DD word" per line; errors name the line.
UsedLedger parse_ledger(std::istream& in);
UsedLedger load_ledger(const std::filesystem::path& path);
void write_ledger(std::ostream& out, const UsedLedger& ledger);

/// `full` minus every word used on or before `as_of`, order kept. Throws
/// LedgerError naming any ledger word that is not in `full`.
Lexicon remaining_solutions(const Lexicon& full, const UsedLedger& ledger, Date as_of);

struct DailyOptions {
  /// Also drop used words from the guess list.
  bool exclude_guesses = false;
  /// Keep only solutions that are also in this list (e.g. the original
  /// answers); guesses still come from the full list.
  std::optional<Lexicon> restrict_solutions;
};

struct DailyStrategy {
  Date as_of;
  Lexicon solutions;
  Lexicon guesses;
  StrategyTree tree;
  EvalReport report;
};

/// Greedy strategy for the answers still unused as of `as_of`.
DailyStrategy daily_strategy(const Lexicon& full, const UsedLedger& ledger, Date as_of, const HeuristicSpec& spec,
                             Mode mode, const DailyOptions& options = {});

/// Writes strategy-DATE.json, report-DATE.txt and report-DATE.csv into
/// `dir` (created if needed). Returns the tree file path.
std::filesystem::path write_daily_outputs(const std::filesystem::path& dir, const DailyStrategy& daily,
                                          const HeuristicSpec& spec, Mode mode);

}  // namespace wordle
