// Command-line driver: build, eval, suggest, sweep, optimal, daily, serve.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "http_server.hpp"
#include "wordle/history.hpp"
#include "wordle/optimal.hpp"
#include "wordle/service.hpp"
#include "wordle/strategy.hpp"

namespace {

using namespace wordle;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ListArgs {
  std::string solutions;
  std::string guesses;
};

struct SpecArgs {
  std::string heuristic = "negnumbins";
  std::string tiebreak = "none";
  std::string mode = "regular";
};

void add_lists(CLI::App* cmd, ListArgs& args) {
  cmd->add_option("--solutions", args.solutions, "Solution word list")->required()->check(CLI::ExistingFile);
  cmd->add_option("--guesses", args.guesses, "Guess word list (default: the solution list)")
      ->check(CLI::ExistingFile);
}

void add_spec(CLI::App* cmd, SpecArgs& args) {
  cmd->add_option("--heuristic", args.heuristic, "Primary heuristic")->capture_default_str();
  cmd->add_option("--tiebreak", args.tiebreak, "Tie-break heuristic or 'none'")->capture_default_str();
  cmd->add_option("--mode", args.mode, "regular, hard or superhard")->capture_default_str();
}

HeuristicSpec to_spec(const SpecArgs& args) {
  HeuristicSpec spec;
  const auto primary = parse_heuristic(args.heuristic);
  if (!primary) throw CliError("unknown heuristic '" + args.heuristic + "'");
  spec.primary = *primary;
  if (!args.tiebreak.empty() && args.tiebreak != "none") {
    const auto tb = parse_heuristic(args.tiebreak);
    if (!tb) throw CliError("unknown heuristic '" + args.tiebreak + "'");
    spec.tiebreak = *tb;
  }
  return spec;
}

Mode to_mode(const std::string& text) {
  const auto mode = parse_mode(text);
  if (!mode) throw CliError("unknown mode '" + text + "'");
  return *mode;
}

std::pair<Lexicon, Lexicon> load_lists(const ListArgs& args) {
  Lexicon solutions = load_lexicon(args.solutions);
  Lexicon guesses = args.guesses.empty() ? solutions : load_lexicon(args.guesses);
  return {std::move(solutions), std::move(guesses)};
}

std::string method_name(const HeuristicSpec& spec, Mode mode) {
  std::string name = spec.name();
  if (mode != Mode::regular) name += " (" + std::string(to_string(mode)) + ")";
  return name;
}

void write_csv_file(const std::string& path, std::span<const ReportRow> rows) {
  std::ofstream out(path);
  if (!out) throw CliError("cannot write '" + path + "'");
  write_report_csv(out, rows);
}

void print_histogram(const EvalReport& report) {
  std::cout << "guesses:";
  for (auto [k, n] : report.histogram) std::cout << ' ' << k << ':' << n;
  std::cout << '\n';
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  ListArgs lists;
  SpecArgs spec;
  std::string out;
  std::string csv;
};

int run_build(const BuildArgs& a) {
  const auto [solutions, guesses] = load_lists(a.lists);
  const HeuristicSpec spec = to_spec(a.spec);
  const Mode mode = to_mode(a.spec.mode);
  const auto start = std::chrono::steady_clock::now();
  const Game game(solutions, guesses);
  const StrategyTree tree = build_tree(game, spec, mode);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const EvalReport report = evaluate(tree, solutions);
  const ReportRow row{method_name(spec, mode), tree.root.guess.str(), report};
  write_report_table(std::cout, std::span(&row, 1));
  print_histogram(report);
  std::cout << "built " << tree.node_count() << " nodes in " << std::fixed << std::setprecision(2) << seconds
            << "s\n";
  if (!a.out.empty()) {
    save_tree(a.out, tree);
    std::cout << "wrote " << a.out << '\n';
  }
  if (!a.csv.empty()) write_csv_file(a.csv, std::span(&row, 1));
  return 0;
}

struct EvalArgs {
  std::string tree;
  std::string solutions;
  std::string csv;
  std::string method = "tree";
};

int run_eval(const EvalArgs& a) {
  const StrategyTree tree = read_tree(a.tree);
  const Lexicon solutions = load_lexicon(a.solutions);
  const EvalReport report = evaluate(tree, solutions);
  const ReportRow row{a.method, tree.root.guess.str(), report};
  write_report_table(std::cout, std::span(&row, 1));
  print_histogram(report);
  if (!a.csv.empty()) write_csv_file(a.csv, std::span(&row, 1));
  return 0;
}

struct SuggestArgs {
  ListArgs lists;
  SpecArgs spec{"negnumbins", "expbinsize", "regular"};
  std::string history;
  std::size_t top = 10;
  bool json = false;
};

int run_suggest(const SuggestArgs& a) {
  auto [solutions, guesses] = load_lists(a.lists);
  const Service service(std::move(solutions), std::move(guesses));
  SuggestRequest req;
  req.history = parse_history_text(a.history);
  req.spec = to_spec(a.spec);
  req.mode = to_mode(a.spec.mode);
  req.top_k = a.top;
  const SuggestResponse resp = service.suggest(req);
  if (a.json) {
    std::cout << to_json(resp).dump(2) << '\n';
    return 0;
  }
  std::cout << "remaining: " << resp.remaining << '\n';
  std::cout << std::left << std::setw(4) << "#" << std::setw(8) << "word" << std::right << std::setw(14) << "score"
            << std::setw(6) << "bins" << std::setw(6) << "max" << std::setw(10) << "expected" << std::setw(9)
            << "entropy" << "  candidate\n";
  for (std::size_t i = 0; i < resp.suggestions.size(); ++i) {
    const Suggestion& s = resp.suggestions[i];
    std::cout << std::left << std::setw(4) << i + 1 << std::setw(8) << s.word << std::right << std::setw(14)
              << s.primary.str() << std::setw(6) << s.stats.bins << std::setw(6) << s.stats.max_bin << std::fixed
              << std::setprecision(3) << std::setw(10) << s.stats.expected_bin << std::setw(9) << s.stats.entropy
              << "  " << (s.consistent ? "yes" : "no") << '\n';
  }
  if (resp.remaining <= 20) {
    std::cout << "candidates:";
    for (const std::string& w : resp.candidates_sample) std::cout << ' ' << w;
    std::cout << '\n';
  }
  return 0;
}

struct SweepArgs {
  ListArgs lists;
  std::string mode = "regular";
  std::string primary;  // with --combos
  bool combos = false;
  std::string csv;
};

int run_sweep(const SweepArgs& a) {
  const auto [solutions, guesses] = load_lists(a.lists);
  const Mode mode = to_mode(a.mode);
  const Game game(solutions, guesses);
  std::vector<HeuristicSpec> specs;
  if (a.combos) {
    const auto primary = parse_heuristic(a.primary.empty() ? "negnumbins" : a.primary);
    if (!primary) throw CliError("unknown heuristic '" + a.primary + "'");
    for (HeuristicId tb : kAllHeuristics) {
      if (tb != *primary) specs.push_back({*primary, tb});
    }
  } else {
    for (HeuristicId id : kAllHeuristics) specs.push_back({id, std::nullopt});
  }
  std::vector<ReportRow> rows;
  for (const HeuristicSpec& spec : specs) {
    const StrategyTree tree = build_tree(game, spec, mode);
    rows.push_back({method_name(spec, mode), tree.root.guess.str(), evaluate(tree, solutions)});
    std::cerr << "  " << rows.back().method << " done\n";
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& x, const ReportRow& y) {
    return x.report.total_guesses < y.report.total_guesses;
  });
  std::cout << solutions.size() << " solutions, " << guesses.size() << " guesses\n";
  write_report_table(std::cout, rows);
  if (!a.csv.empty()) write_csv_file(a.csv, rows);
  return 0;
}

struct OptimalArgs {
  ListArgs lists;
  std::string mode = "superhard";
  std::size_t cap = 0;
  int max_depth = 0;
  bool no_memo = false;
  std::string out;
};

int run_optimal(const OptimalArgs& a) {
  const auto [solutions, guesses] = load_lists(a.lists);
  SearchConfig config;
  config.mode = to_mode(a.mode);
  config.cap = a.cap;
  config.max_depth = a.max_depth;
  config.memo = !a.no_memo;
  const OptimalResult result = optimal_tree(solutions, guesses, config);
  const ReportRow row{"optimal (" + std::string(to_string(config.mode)) + ")", result.tree.root.guess.str(),
                      result.report};
  write_report_table(std::cout, std::span(&row, 1));
  print_histogram(result.report);
  std::cout << "exact: " << (result.exact ? "yes" : "no") << '\n';
  std::cout << "nodes searched: " << result.nodes_searched << '\n';
  if (!a.out.empty()) {
    save_tree(a.out, result.tree);
    std::cout << "wrote " << a.out << '\n';
  }
  return 0;
}

struct DailyArgs {
  std::string solutions;
  std::string ledger;
  std::string date;
  std::string restrict;
  bool exclude_guesses = false;
  SpecArgs spec{"negnumbins", "expbinsize", "regular"};
  std::string out = "daily";
};

int run_daily(const DailyArgs& a) {
  const Lexicon full = load_lexicon(a.solutions);
  const UsedLedger ledger = load_ledger(a.ledger);
  const Date as_of = parse_date(a.date);
  const HeuristicSpec spec = to_spec(a.spec);
  const Mode mode = to_mode(a.spec.mode);
  DailyOptions options;
  options.exclude_guesses = a.exclude_guesses;
  if (!a.restrict.empty()) options.restrict_solutions = load_lexicon(a.restrict);
  const DailyStrategy daily = daily_strategy(full, ledger, as_of, spec, mode, options);
  const auto path = write_daily_outputs(a.out, daily, spec, mode);
  std::cout << "date " << format_date(as_of) << ": " << daily.solutions.size() << " solutions remain, "
            << daily.guesses.size() << " guesses\n";
  const ReportRow row{method_name(spec, mode), daily.tree.root.guess.str(), daily.report};
  write_report_table(std::cout, std::span(&row, 1));
  print_histogram(daily.report);
  std::cout << "wrote " << path.string() << '\n';
  return 0;
}

struct ServeArgs {
  ListArgs lists;
  std::string ledger;
  std::string date;
  std::string host = "127.0.0.1";
  int port = 8080;
};

int run_serve(const ServeArgs& a) {
  auto [solutions, guesses] = load_lists(a.lists);
  std::size_t used = 0;
  if (!a.ledger.empty()) {
    const UsedLedger ledger = load_ledger(a.ledger);
    if (!ledger.empty()) {
      const Date as_of = a.date.empty() ? ledger.entries().back().date : parse_date(a.date);
      const std::size_t before = solutions.size();
      solutions = remaining_solutions(solutions, ledger, as_of);
      used = before - solutions.size();
    }
  }
  const Service service(std::move(solutions), std::move(guesses), used);
  std::cout << "serving " << service.game().solutions().size() << " solutions on http://" << a.host << ':'
            << a.port << '\n'
            << std::flush;
  if (!serve(service, a.host, a.port)) throw CliError("cannot listen on " + a.host + ":" + std::to_string(a.port));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wordle strategy builder and play assistant"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build a greedy strategy tree and report its performance");
  add_lists(build_cmd, build.lists);
  add_spec(build_cmd, build.spec);
  build_cmd->add_option("--out", build.out, "Write the tree document here");
  build_cmd->add_option("--csv", build.csv, "Write the report as CSV");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a saved strategy tree");
  eval_cmd->add_option("--tree", eval.tree, "Tree document")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--solutions", eval.solutions, "Solution word list")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--csv", eval.csv, "Write the report as CSV");
  eval_cmd->add_option("--method", eval.method, "Method label for the report")->capture_default_str();

  SuggestArgs suggest;
  auto* suggest_cmd = app.add_subcommand("suggest", "Rank next guesses for a game in progress");
  add_lists(suggest_cmd, suggest.lists);
  add_spec(suggest_cmd, suggest.spec);
  suggest_cmd->add_option("--history", suggest.history, "Guesses so far, e.g. raise=BYBBG,close=GBBYB");
  suggest_cmd->add_option("--top", suggest.top, "Suggestions to show")->capture_default_str()->check(CLI::PositiveNumber);
  suggest_cmd->add_flag("--json", suggest.json, "Print the API response document");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Compare every heuristic on one word list");
  add_lists(sweep_cmd, sweep.lists);
  sweep_cmd->add_option("--mode", sweep.mode, "regular, hard or superhard")->capture_default_str();
  sweep_cmd->add_flag("--combos", sweep.combos, "Pair one primary with every other heuristic as tie-break");
  sweep_cmd->add_option("--primary", sweep.primary, "Primary heuristic for --combos (default negnumbins)");
  sweep_cmd->add_option("--csv", sweep.csv, "Write the table as CSV");

  OptimalArgs optimal;
  auto* optimal_cmd = app.add_subcommand("optimal", "Exhaustive minimum-average search (small lists only)");
  add_lists(optimal_cmd, optimal.lists);
  optimal_cmd->add_option("--mode", optimal.mode, "regular, hard or superhard")->capture_default_str();
  optimal_cmd->add_option("--cap", optimal.cap, "Guesses tried per node, 0 for all")->capture_default_str();
  optimal_cmd->add_option("--max-depth", optimal.max_depth, "Guess limit, 0 for none")->capture_default_str();
  optimal_cmd->add_flag("--no-memo", optimal.no_memo, "Disable the transposition table");
  optimal_cmd->add_option("--out", optimal.out, "Write the tree document here");

  DailyArgs daily;
  auto* daily_cmd = app.add_subcommand("daily", "Regenerate the strategy without already-used answers");
  daily_cmd->add_option("--solutions", daily.solutions, "Full solution list")->required()->check(CLI::ExistingFile);
  daily_cmd->add_option("--ledger", daily.ledger, "Used answers, 'YYYY-MM-DD word' per line")
      ->required()
      ->check(CLI::ExistingFile);
  daily_cmd->add_option("--date", daily.date, "As-of date YYYY-MM-DD")->required();
  daily_cmd->add_flag("--exclude-guesses", daily.exclude_guesses, "Also remove used words from the guesses");
  daily_cmd->add_option("--restrict", daily.restrict, "Keep only solutions also in this list")
      ->check(CLI::ExistingFile);
  add_spec(daily_cmd, daily.spec);
  daily_cmd->add_option("--out", daily.out, "Output directory")->capture_default_str();

  ServeArgs serve_args;
  auto* serve_cmd = app.add_subcommand("serve", "Run the local HTTP suggestion service");
  add_lists(serve_cmd, serve_args.lists);
  serve_cmd->add_option("--ledger", serve_args.ledger, "Used answers to exclude")->check(CLI::ExistingFile);
  serve_cmd->add_option("--date", serve_args.date, "As-of date for the ledger (default: its last entry)");
  serve_cmd->add_option("--host", serve_args.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--port", serve_args.port, "Port")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build_cmd) return run_build(build);
    if (*eval_cmd) return run_eval(eval);
    if (*suggest_cmd) return run_suggest(suggest);
    if (*sweep_cmd) return run_sweep(sweep);
    if (*optimal_cmd) return run_optimal(optimal);
    if (*daily_cmd) return run_daily(daily);
    if (*serve_cmd) return run_serve(serve_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
