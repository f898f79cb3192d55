#include <benchmark/benchmark.h>

#include "wordle/binning.hpp"
#include "wordle/heuristics.hpp"
#include "wordle/optimal.hpp"
#include "wordle/strategy.hpp"

using namespace wordle;

namespace {

const Lexicon& words(int which) {
  static const Lexicon small = load_lexicon(std::string(WORDLE_DATA_DIR) + "/solutions-2315.txt");
  static const Lexicon big = load_lexicon(std::string(WORDLE_DATA_DIR) + "/solutions-3158.txt");
  return which == 0 ? small : big;
}

void BM_ScoreCode(benchmark::State& state) {
  const Lexicon& l = words(0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(score_code(l[i % l.size()].str(), l[(i * 7919) % l.size()].str()));
    ++i;
  }
}
BENCHMARK(BM_ScoreCode);

void BM_PatternTable(benchmark::State& state) {
  const Lexicon& l = words(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PatternTable t(l, l);
    benchmark::DoNotOptimize(t(0, 0));
  }
  state.SetLabel(std::to_string(l.size()) + " words");
}
BENCHMARK(BM_PatternTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PartitionRaise(benchmark::State& state) {
  const Lexicon& l = words(0);
  for (auto _ : state) benchmark::DoNotOptimize(partition(Word("raise"), l.words()).bins().size());
}
BENCHMARK(BM_PartitionRaise)->Unit(benchmark::kMicrosecond);

void BM_RootChoice(benchmark::State& state) {
  static const Game game(words(0), words(0));
  const HeuristicId id = kAllHeuristics[static_cast<std::size_t>(state.range(0))];
  const auto cands = game.all_solutions();
  const auto guesses = game.all_guesses();
  for (auto _ : state) {
    benchmark::DoNotOptimize(choose_guess(game, cands, guesses, {id, std::nullopt}).guess);
  }
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_RootChoice)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_BuildTree(benchmark::State& state) {
  static const Game game(words(0), words(0));
  const Mode mode = static_cast<Mode>(state.range(0));
  for (auto _ : state) {
    const StrategyTree t = build_tree(game, {HeuristicId::negnumbins, HeuristicId::expbinsize}, mode);
    benchmark::DoNotOptimize(t.root.guess);
  }
  state.SetLabel(std::string(to_string(mode)));
}
BENCHMARK(BM_BuildTree)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_OptimalToy(benchmark::State& state) {
  std::vector<Word> picked;
  const Lexicon& l = words(0);
  for (std::size_t i = 0; picked.size() < static_cast<std::size_t>(state.range(0)); i += 97) picked.push_back(l[i]);
  const Lexicon toy(std::move(picked));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_tree(toy, toy, {}).report.total_guesses);
  }
}
BENCHMARK(BM_OptimalToy)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
