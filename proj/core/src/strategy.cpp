#include "wordle/strategy.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <iomanip>
#include <ostream>

namespace wordle {

namespace {

constexpr int kMaxTreeDepth = 64;

std::array<int, 26> letter_counts(const std::string& w) {
  std::array<int, 26> counts{};
  for (char c : w) ++counts[static_cast<std::size_t>(c - 'a')];
  return counts;
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::regular: return "regular";
    case Mode::hard: return "hard";
    case Mode::superhard: return "superhard";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Mode m : {Mode::regular, Mode::hard, Mode::superhard}) {
    if (lower == to_string(m)) return m;
  }
  return std::nullopt;
}

bool is_consistent(const Word& secret, const Observation& obs) {
  return secret.length() == obs.guess.length() &&
         score_code(obs.guess.str(), secret.str()) == obs.pattern.code();
}

bool is_consistent(const Word& secret, const Constraints& c) {
  return std::all_of(c.history.begin(), c.history.end(),
                     [&](const Observation& o) { return is_consistent(secret, o); });
}

bool is_hard_legal(const Word& guess, const Observation& obs) {
  if (guess.length() != obs.guess.length()) return false;
  std::array<int, 26> required{};
  for (int i = 0; i < guess.length(); ++i) {
    const Color c = obs.pattern[i];
    if (c == Color::Green && guess[i] != obs.guess[i]) return false;
    if (c != Color::Gray) ++required[static_cast<std::size_t>(obs.guess[i] - 'a')];
  }
  const auto have = letter_counts(guess.str());
  for (std::size_t l = 0; l < 26; ++l) {
    if (have[l] < required[l]) return false;
  }
  return true;
}

bool is_hard_legal(const Word& guess, const Constraints& c) {
  return std::all_of(c.history.begin(), c.history.end(),
                     [&](const Observation& o) { return is_hard_legal(guess, o); });
}

bool is_legal(const Word& guess, Mode mode, const Constraints& c) {
  switch (mode) {
    case Mode::regular: return true;
    case Mode::hard: return is_hard_legal(guess, c);
    case Mode::superhard: return is_consistent(guess, c);
  }
  return false;
}

Lexicon legal_guesses(const Lexicon& guesses, Mode mode, const Constraints& c) {
  std::vector<Word> kept;
  for (const Word& w : guesses) {
    if (is_legal(w, mode, c)) kept.push_back(w);
  }
  return Lexicon(std::move(kept), guesses.label());
}

GuessSet restrict_legal(const Game& game, const GuessSet& legal, Mode mode, std::uint32_t guess,
                        PatternCode pattern) {
  if (mode == Mode::regular) return legal;
  const Lexicon& guesses = game.guesses();
  const Observation obs{guesses[guess], decode(pattern, game.word_length())};
  GuessSet out;
  for (std::uint32_t h : legal) {
    bool keep;
    if (mode == Mode::superhard) {
      const auto s = game.solution_of_guess(h);
      keep = (s ? game.table()(guess, *s) : score_code(obs.guess.str(), guesses[h].str())) == pattern;
    } else {
      keep = is_hard_legal(guesses[h], obs);
    }
    if (keep) out.push_back(h);
  }
  return out;
}

const StrategyNode* StrategyNode::child(PatternCode pattern) const noexcept {
  auto it = std::lower_bound(children.begin(), children.end(), pattern,
                             [](const auto& kv, PatternCode p) { return kv.first < p; });
  return it != children.end() && it->first == pattern ? &it->second : nullptr;
}

std::size_t StrategyTree::node_count() const {
  std::size_t n = 0;
  std::vector<const StrategyNode*> stack{&root};
  while (!stack.empty()) {
    const StrategyNode* node = stack.back();
    stack.pop_back();
    ++n;
    for (const auto& [code, child] : node->children) stack.push_back(&child);
  }
  return n;
}

// ---------------------------------------------------------------------------

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const Game& game, const HeuristicSpec& spec, Mode mode)
      : game_(game), spec_(spec), mode_(mode), green_(all_green_code(game.word_length())) {}

  StrategyNode build(const CandidateSet& cands, const GuessSet& legal, int depth) {
    if (depth > kMaxTreeDepth) throw std::logic_error("build_tree: tree depth limit exceeded");
    const Lexicon& sols = game_.solutions();
    StrategyNode node;
    if (cands.size() <= 2) {
      node.guess = sols[cands.front()];
      if (cands.size() == 2) {
        const Word& other = sols[cands.back()];
        node.children.emplace_back(score_code(node.guess.str(), other.str()), StrategyNode{other, {}});
      }
      return node;
    }

    const GuessChoice choice = choose_guess(game_, cands, legal, spec_);
    const std::uint32_t g = choice.guess;
    node.guess = game_.guesses()[g];
    const auto row = game_.table().row(g);

    std::vector<std::pair<PatternCode, std::uint32_t>> keyed;
    keyed.reserve(cands.size());
    for (std::uint32_t s : cands) keyed.emplace_back(row[s], s);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    for (std::size_t i = 0; i < keyed.size();) {
      const PatternCode code = keyed[i].first;
      CandidateSet sub;
      for (; i < keyed.size() && keyed[i].first == code; ++i) sub.push_back(keyed[i].second);
      if (code == green_) continue;
      if (mode_ == Mode::regular) {
        node.children.emplace_back(code, build(sub, legal, depth + 1));
      } else {
        node.children.emplace_back(code, build(sub, restrict_legal(game_, legal, mode_, g, code), depth + 1));
      }
    }
    return node;
  }

 private:
  const Game& game_;
  HeuristicSpec spec_;
  Mode mode_;
  PatternCode green_;
};

}  // namespace

StrategyTree build_tree(const Game& game, const HeuristicSpec& spec, Mode mode) {
  if (game.solutions().empty()) throw StrategyError("build_tree: solution list is empty");
  if (game.guesses().empty()) throw StrategyError("build_tree: guess list is empty");
  TreeBuilder builder(game, spec, mode);
  return StrategyTree{builder.build(game.all_solutions(), game.all_guesses(), 1)};
}

StrategyTree build_tree(const Lexicon& solutions, const Lexicon& guesses, const HeuristicSpec& spec,
                        Mode mode) {
  return build_tree(Game(solutions, guesses), spec, mode);
}

// ---------------------------------------------------------------------------

std::size_t EvalReport::solved_within(int guesses) const {
  std::size_t n = 0;
  for (auto [k, count] : histogram) {
    if (k <= guesses) n += count;
  }
  return n;
}

double EvalReport::percent_within(int guesses) const {
  if (solutions == 0) return 0.0;
  return 100.0 * static_cast<double>(solved_within(guesses)) / static_cast<double>(solutions);
}

std::optional<int> guesses_for(const StrategyTree& tree, const Word& secret) {
  const StrategyNode* node = &tree.root;
  for (int depth = 1; node != nullptr && depth <= kMaxTreeDepth; ++depth) {
    if (node->guess == secret) return depth;
    if (node->guess.length() != secret.length()) return std::nullopt;
    node = node->child(score_code(node->guess.str(), secret.str()));
  }
  return std::nullopt;
}

EvalReport evaluate(const StrategyTree& tree, const Lexicon& solutions) {
  EvalReport report;
  for (const Word& s : solutions) {
    const auto k = guesses_for(tree, s);
    if (!k) throw StrategyError("strategy does not solve '" + s.str() + "'");
    ++report.solutions;
    report.total_guesses += static_cast<std::uint64_t>(*k);
    report.max_guesses = std::max(report.max_guesses, *k);
    ++report.histogram[*k];
  }
  return report;
}

void write_report_table(std::ostream& out, std::span<const ReportRow> rows) {
  std::size_t method_w = 6;
  for (const ReportRow& r : rows) method_w = std::max(method_w, r.method.size());
  const auto flags = out.flags();
  out << std::left << std::setw(static_cast<int>(method_w)) << "method" << "  " << std::setw(6) << "start"
      << std::right << std::setw(9) << "average" << std::setw(5) << "max" << std::setw(9) << "% <=6"
      << '\n';
  for (const ReportRow& r : rows) {
    out << std::left << std::setw(static_cast<int>(method_w)) << r.method << "  " << std::setw(6)
        << r.start << std::right << std::fixed << std::setprecision(4) << std::setw(9)
        << r.report.average() << std::setw(5) << r.report.max_guesses << std::setprecision(2)
        << std::setw(9) << r.report.percent_within(6) << '\n';
  }
  out.flags(flags);
}

void write_report_csv(std::ostream& out, std::span<const ReportRow> rows) {
  const auto flags = out.flags();
  out << "method,start,avg,max,pct6\n";
  for (const ReportRow& r : rows) {
    out << r.method << ',' << r.start << ',' << std::fixed << std::setprecision(4) << r.report.average()
        << ',' << r.report.max_guesses << ',' << std::setprecision(2) << r.report.percent_within(6)
        << '\n';
  }
  out.flags(flags);
}

}  // namespace wordle
