#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordle/feedback.hpp"
#include "wordle/game.hpp"
#include "wordle/heuristics.hpp"
#include "wordle/lexicon.hpp"

namespace wordle {

enum class Mode : std::uint8_t { regular, hard, superhard };

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view name);

struct Observation {
  Word guess;
  Pattern pattern;
};

/// Everything learned so far in one game.
struct Constraints {
  std::vector<Observation> history;
};

/// `secret` would have produced every recorded pattern.
bool is_consistent(const Word& secret, const Observation& obs);
bool is_consistent(const Word& secret, const Constraints& c);

/// Hard-mode legality: every green stays in place and every letter marked
/// green or yellow appears at least as often as it was marked. Gray letters
/// may be reused.
bool is_hard_legal(const Word& guess, const Observation& obs);
bool is_hard_legal(const Word& guess, const Constraints& c);

bool is_legal(const Word& guess, Mode mode, const Constraints& c);
Lexicon legal_guesses(const Lexicon& guesses, Mode mode, const Constraints& c);

/// Index form: the members of `legal` still allowed after `guess` drew
/// `pattern`. Legality is a conjunction over observations, so filtering the
/// parent's set is enough.
GuessSet restrict_legal(const Game& game, const GuessSet& legal, Mode mode, std::uint32_t guess,
                        PatternCode pattern);

/// One decision point: the guess to play and the follow-up for each
/// response other than all-green. Children are sorted by pattern code.
struct StrategyNode {
  Word guess;
  std::vector<std::pair<PatternCode, StrategyNode>> children;

  const StrategyNode* child(PatternCode pattern) const noexcept;
};

struct StrategyTree {
  StrategyNode root;

  int word_length() const noexcept { return root.guess.length(); }
  std::size_t node_count() const;
};

class StrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Greedy tree: at each node with more than two candidates the guess comes
/// from choose_guess over the mode-legal guesses; with one or two left the
/// first remaining candidate is played.
StrategyTree build_tree(const Game& game, const HeuristicSpec& spec, Mode mode);
StrategyTree build_tree(const Lexicon& solutions, const Lexicon& guesses, const HeuristicSpec& spec,
                        Mode mode);

struct EvalReport {
  std::size_t solutions = 0;
  std::uint64_t total_guesses = 0;
  int max_guesses = 0;
  std::map<int, std::size_t> histogram;  // guesses needed -> solutions

  Rational average_exact() const noexcept {
    return {static_cast<std::int64_t>(total_guesses), static_cast<std::int64_t>(solutions ? solutions : 1)};
  }
  double average() const noexcept { return average_exact().value(); }
  std::size_t solved_within(int guesses) const;
  double percent_within(int guesses = 6) const;
};

/// Guesses `tree` needs for `secret`, or nullopt when play leaves the tree.
std::optional<int> guesses_for(const StrategyTree& tree, const Word& secret);

/// Throws StrategyError naming the first solution the tree does not solve.
EvalReport evaluate(const StrategyTree& tree, const Lexicon& solutions);

/// One line of a comparison table.
struct ReportRow {
  std::string method;
  std::string start;
  EvalReport report;
};

void write_report_table(std::ostream& out, std::span<const ReportRow> rows);
/// Columns: method,start,avg,max,pct6.
void write_report_csv(std::ostream& out, std::span<const ReportRow> rows);

class TreeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON: {"guess":"...","children":{"BBYGB":{...},...}} with keys
/// in ascending pattern-code order. No whitespace, no trailing newline.
std::string serialize_tree(const StrategyTree& tree);
StrategyTree load_tree(std::string_view document);

void save_tree(const std::string& path, const StrategyTree& tree);
StrategyTree read_tree(const std::string& path);

}  // namespace wordle
