#include "wordle/optimal.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace wordle {

namespace {

constexpr int kUnboundedDepth = 64;

struct Outcome {
  bool feasible = false;
  std::uint64_t total = 0;
  int depth = 0;
  std::uint32_t guess = 0;
};

bool better(const Outcome& a, const Outcome& b) {
  if (!b.feasible) return a.feasible;
  if (!a.feasible) return false;
  if (a.total != b.total) return a.total < b.total;
  return a.depth < b.depth;
}

class Searcher {
 public:
  Searcher(const Game& game, const SearchConfig& config)
      : game_(game),
        config_(config),
        green_(all_green_code(game.word_length())),
        child_bins_(pattern_count(game.word_length()) - 1) {}

  Outcome solve(const CandidateSet& cands, const GuessSet& legal, int depth_left) {
    if (depth_left <= 0) return {};
    std::string key;
    if (config_.memo) {
      key = memo_key(cands, legal, depth_left);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    ++nodes_;
    Outcome best = search(cands, legal, depth_left);
    if (config_.memo) memo_.emplace(std::move(key), best);
    return best;
  }

  StrategyNode extract(const CandidateSet& cands, const GuessSet& legal, int depth_left) {
    const Outcome o = solve(cands, legal, depth_left);
    StrategyNode node;
    node.guess = game_.guesses()[o.guess];
    for (auto& [code, sub] : split(o.guess, cands)) {
      if (code == green_) continue;
      node.children.emplace_back(
          code, extract(sub, restrict_legal(game_, legal, config_.mode, o.guess, code), depth_left - 1));
    }
    return node;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::vector<std::pair<PatternCode, CandidateSet>> split(std::uint32_t g, const CandidateSet& cands) const {
    const auto row = game_.table().row(g);
    std::vector<std::pair<PatternCode, std::uint32_t>> keyed;
    keyed.reserve(cands.size());
    for (std::uint32_t s : cands) keyed.emplace_back(row[s], s);
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<PatternCode, CandidateSet>> bins;
    for (const auto& [code, s] : keyed) {
      if (bins.empty() || bins.back().first != code) bins.emplace_back(code, CandidateSet{});
      bins.back().second.push_back(s);
    }
    return bins;
  }

  GuessSet options(const CandidateSet& cands, const GuessSet& legal) {
    NodeEvaluator ev(game_, cands);
    struct Ranked {
      std::uint32_t guess;
      std::int64_t bins;
      Score expected;
      std::size_t pos;
    };
    std::vector<Ranked> ranked;
    for (std::size_t i = 0; i < legal.size(); ++i) {
      const std::uint32_t g = legal[i];
      ev.load(g);
      if (ev.bin_count() == 1 && !ev.is_candidate(g)) continue;
      ranked.push_back({g, static_cast<std::int64_t>(ev.bin_count()), ev.score(HeuristicId::expbinsize), i});
    }
    if (config_.cap > 0 && ranked.size() > config_.cap) {
      std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.bins != b.bins) return a.bins > b.bins;
        return a.expected < b.expected;
      });
      ranked.resize(config_.cap);
      std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) { return a.pos < b.pos; });
    }
    GuessSet out;
    out.reserve(ranked.size());
    for (const Ranked& r : ranked) out.push_back(r.guess);
    return out;
  }

  Outcome search(const CandidateSet& cands, const GuessSet& legal, int depth_left) {
    Outcome best;
    for (std::uint32_t g : options(cands, legal)) {
      const auto bins = split(g, cands);
      std::uint64_t bound = 0;
      for (const auto& [code, sub] : bins) {
        if (code != green_) bound += lower_bound(sub.size(), child_bins_);
      }
      Outcome here{true, cands.size(), 1, g};
      for (const auto& [code, sub] : bins) {
        if (code == green_) continue;
        if (best.feasible && here.total + bound > best.total) {
          here.feasible = false;
          break;
        }
        const Outcome child =
            solve(sub, restrict_legal(game_, legal, config_.mode, g, code), depth_left - 1);
        if (!child.feasible) {
          here.feasible = false;
          break;
        }
        bound -= lower_bound(sub.size(), child_bins_);
        here.total += child.total;
        here.depth = std::max(here.depth, child.depth + 1);
      }
      if (better(here, best)) best = here;
    }
    return best;
  }

  std::string memo_key(const CandidateSet& cands, const GuessSet& legal, int depth_left) const {
    std::string key;
    key.resize((cands.size() + legal.size() + 2) * sizeof(std::uint32_t));
    char* out = key.data();
    const std::uint32_t header[2] = {static_cast<std::uint32_t>(cands.size()),
                                     static_cast<std::uint32_t>(depth_left)};
    std::memcpy(out, header, sizeof(header));
    out += sizeof(header);
    std::memcpy(out, cands.data(), cands.size() * sizeof(std::uint32_t));
    out += cands.size() * sizeof(std::uint32_t);
    std::memcpy(out, legal.data(), legal.size() * sizeof(std::uint32_t));
    return key;
  }

  const Game& game_;
  SearchConfig config_;
  PatternCode green_;
  std::size_t child_bins_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, Outcome> memo_;
};

}  // namespace

std::uint64_t lower_bound(std::size_t candidates, std::size_t max_bins) {
  if (candidates == 0) return 0;
  const std::uint64_t rest = candidates - 1;
  const std::uint64_t second = std::min<std::uint64_t>(rest, max_bins);
  return 1 + 2 * second + 3 * (rest - second);
}

std::uint64_t lower_bound(const Game& game, std::span<const std::uint32_t> candidates,
                          std::span<const std::uint32_t> allowed) {
  if (candidates.empty()) return 0;
  const PatternCode green = all_green_code(game.word_length());
  NodeEvaluator ev(game, candidates);
  std::size_t most = 0;
  for (std::uint32_t g : allowed) {
    ev.load(g);
    std::size_t bins = ev.bin_count();
    // The all-green bin, when present, solves its word on this guess.
    const auto s = game.solution_of_guess(g);
    if (s && ev.is_candidate(g) && game.table()(g, *s) == green) --bins;
    most = std::max(most, bins);
  }
  return lower_bound(candidates.size(), most);
}

OptimalResult optimal_tree(const Game& game, const SearchConfig& config) {
  if (game.solutions().empty() || game.guesses().empty()) {
    throw SearchInfeasible("optimal search needs nonempty solution and guess lists");
  }
  for (const Word& w : game.solutions()) {
    if (!game.guesses().contains(w)) {
      throw SearchInfeasible("solution '" + w.str() + "' is not in the guess list");
    }
  }
  const int depth = config.max_depth > 0 ? config.max_depth : kUnboundedDepth;
  Searcher searcher(game, config);
  const CandidateSet all = game.all_solutions();
  const GuessSet legal = game.all_guesses();
  if (!searcher.solve(all, legal, depth).feasible) {
    throw SearchInfeasible("no strategy solves every word within " + std::to_string(depth) + " guesses");
  }
  OptimalResult result;
  result.tree = StrategyTree{searcher.extract(all, legal, depth)};
  result.report = evaluate(result.tree, game.solutions());
  result.exact = config.cap == 0;
  result.nodes_searched = searcher.nodes();
  return result;
}

OptimalResult optimal_tree(const Lexicon& solutions, const Lexicon& guesses, const SearchConfig& config) {
  return optimal_tree(Game(solutions, guesses), config);
}

}  // namespace wordle
