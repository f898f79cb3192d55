#include "wordle/history.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace wordle {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw LedgerError("bad number '" + std::string(text) + "'");
  return value;
}

}  // namespace

Date parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw LedgerError("bad date '" + std::string(text) + "': expected YYYY-MM-DD");
  }
  const Date d{std::chrono::year{parse_int(text.substr(0, 4))},
               std::chrono::month{static_cast<unsigned>(parse_int(text.substr(5, 2)))},
               std::chrono::day{static_cast<unsigned>(parse_int(text.substr(8, 2)))}};
  if (!d.ok()) throw LedgerError("bad date '" + std::string(text) + "'");
  return d;
}

std::string format_date(Date d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                static_cast<unsigned>(d.day()));
  return buf;
}

UsedLedger::UsedLedger(std::vector<LedgerEntry> entries) : entries_(std::move(entries)) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const LedgerEntry& e = entries_[i];
    if (i > 0 && !(entries_[i - 1].date < e.date)) {
      throw LedgerError("ledger dates must strictly increase (" + format_date(e.date) + ")");
    }
    if (!seen.insert(e.word.str()).second) throw LedgerError("word '" + e.word.str() + "' is used twice");
  }
}

std::vector<Word> UsedLedger::used_through(Date as_of) const {
  std::vector<Word> out;
  for (const LedgerEntry& e : entries_) {
    if (e.date > as_of) break;
    out.push_back(e.word);
  }
  return out;
}

UsedLedger parse_ledger(std::istream& in) {
  std::vector<LedgerEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto space = line.find(' ');
    try {
      if (space == std::string::npos) throw LedgerError("expected 'YYYY-MM-DD word'");
      entries.push_back({parse_date(std::string_view(line).substr(0, space)), Word(line.substr(space + 1))});
    } catch (const std::exception& e) {
      throw LedgerError("ledger line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return UsedLedger(std::move(entries));
}

UsedLedger load_ledger(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LedgerError("cannot open ledger '" + path.string() + "'");
  return parse_ledger(in);
}

void write_ledger(std::ostream& out, const UsedLedger& ledger) {
  for (const LedgerEntry& e : ledger.entries()) out << format_date(e.date) << ' ' << e.word.str() << '\n';
}

Lexicon remaining_solutions(const Lexicon& full, const UsedLedger& ledger, Date as_of) {
  for (const LedgerEntry& e : ledger.entries()) {
    if (!full.contains(e.word)) {
      throw LedgerError("ledger word '" + e.word.str() + "' (" + format_date(e.date) + ") is not in " +
                        (full.label().empty() ? std::string("the solution list") : "'" + full.label() + "'"));
    }
  }
  return subtract(full, ledger.used_through(as_of));
}

DailyStrategy daily_strategy(const Lexicon& full, const UsedLedger& ledger, Date as_of, const HeuristicSpec& spec,
                             Mode mode, const DailyOptions& options) {
  Lexicon solutions = remaining_solutions(full, ledger, as_of);
  if (options.restrict_solutions) {
    std::vector<Word> kept;
    for (const Word& w : solutions) {
      if (options.restrict_solutions->contains(w)) kept.push_back(w);
    }
    solutions = Lexicon(std::move(kept), solutions.label());
  }
  if (solutions.empty()) throw LedgerError("no solutions remain as of " + format_date(as_of));
  Lexicon guesses = options.exclude_guesses ? subtract(full, ledger.used_through(as_of)) : full;

  const Game game(solutions, guesses);
  StrategyTree tree = build_tree(game, spec, mode);
  EvalReport report = evaluate(tree, solutions);
  return {as_of, std::move(solutions), std::move(guesses), std::move(tree), std::move(report)};
}

std::filesystem::path write_daily_outputs(const std::filesystem::path& dir, const DailyStrategy& daily,
                                          const HeuristicSpec& spec, Mode mode) {
  std::filesystem::create_directories(dir);
  const std::string date = format_date(daily.as_of);
  const auto tree_path = dir / ("strategy-" + date + ".json");
  save_tree(tree_path.string(), daily.tree);

  std::string method = spec.name();
  if (mode != Mode::regular) method += " (" + std::string(to_string(mode)) + ")";
  const ReportRow row{method, daily.tree.root.guess.str(), daily.report};
  {
    std::ofstream txt(dir / ("report-" + date + ".txt"));
    txt << "date " << date << ": " << daily.solutions.size() << " solutions, " << daily.guesses.size()
        << " guesses\n";
    write_report_table(txt, std::span(&row, 1));
  }
  {
    std::ofstream csv(dir / ("report-" + date + ".csv"));
    write_report_csv(csv, std::span(&row, 1));
  }
  return tree_path;
}

}  // namespace wordle
