#include "wordle/heuristics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wordle {

namespace {

__extension__ typedef __int128 wide_int;

constexpr int kLetters = 26;

double negentropy_of(std::vector<std::uint32_t> sizes) {
  // Ascending order makes the sum bit-identical for equal size multisets.
  std::sort(sizes.begin(), sizes.end());
  double total = 0;
  for (std::uint32_t n : sizes) total += n;
  double sum = 0.0;
  for (std::uint32_t n : sizes) {
    const double p = n / total;
    sum += p * std::log(p);
  }
  return sum;
}

// Unnormalized negentropy of the (letter, position) counts: sum c ln c.
// Grows with both bin size and letter concentration; 0 for a single word.
double similarity_from_cells(std::span<const std::uint32_t> cells) {
  double sum = 0.0;
  for (std::uint32_t c : cells) {
    if (c > 1) sum += c * std::log(static_cast<double>(c));
  }
  return sum;
}

bool one_letter_apart(const std::string& a, const std::string& b) noexcept {
  int diffs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i] && ++diffs > 1) return false;
  }
  return diffs == 1;
}

}  // namespace

std::string_view to_string(HeuristicId id) noexcept {
  switch (id) {
    case HeuristicId::negnumbins: return "negnumbins";
    case HeuristicId::negentropy: return "negentropy";
    case HeuristicId::expbinsize: return "expbinsize";
    case HeuristicId::linfinity: return "linfinity";
    case HeuristicId::negnumsingletons: return "negnumsingletons";
    case HeuristicId::maxsimilarity: return "maxsimilarity";
    case HeuristicId::maxbinsize: return "maxbinsize";
    case HeuristicId::maxonediffs: return "maxonediffs";
  }
  return "?";
}

std::optional<HeuristicId> parse_heuristic(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (HeuristicId id : kAllHeuristics) {
    if (lower == to_string(id)) return id;
  }
  if (lower == "expectation") return HeuristicId::expbinsize;
  if (lower == "similarity") return HeuristicId::maxsimilarity;
  return std::nullopt;
}

std::string_view norm_exponent(HeuristicId id) noexcept {
  switch (id) {
    case HeuristicId::negnumbins: return "0";
    case HeuristicId::negentropy: return "1";
    case HeuristicId::expbinsize: return "2";
    case HeuristicId::linfinity:
    case HeuristicId::maxbinsize: return "inf";
    case HeuristicId::negnumsingletons: return "-inf";
    default: return "";
  }
}

std::string HeuristicSpec::name() const {
  std::string out(to_string(primary));
  if (tiebreak) {
    out += '-';
    out += to_string(*tiebreak);
  }
  return out;
}

bool operator<(const Score& a, const Score& b) {
  if (a.id_ != b.id_ || a.value_.index() != b.value_.index()) {
    throw std::logic_error("comparing scores of different heuristics");
  }
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, Rational>) {
          return static_cast<wide_int>(lhs.num) * rhs.den < static_cast<wide_int>(rhs.num) * lhs.den;
        } else {
          return lhs < rhs;
        }
      },
      a.value_);
}

bool operator==(const Score& a, const Score& b) {
  if (a.id_ != b.id_ || a.value_.index() != b.value_.index()) return false;
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, Rational>) {
          return static_cast<wide_int>(lhs.num) * rhs.den == static_cast<wide_int>(rhs.num) * lhs.den;
        } else {
          return lhs == rhs;
        }
      },
      a.value_);
}

double Score::as_double() const {
  return std::visit(
      [](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return v.value();
        } else if constexpr (std::is_same_v<T, LinfinityProfile>) {
          return v.empty() ? 0.0 : static_cast<double>(v.front().first);
        } else {
          return static_cast<double>(v);
        }
      },
      value_);
}

std::string Score::str() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          os << v;
        } else if constexpr (std::is_same_v<T, double>) {
          os << std::fixed << std::setprecision(6) << v;
        } else if constexpr (std::is_same_v<T, Rational>) {
          os << std::fixed << std::setprecision(4) << v.value();
        } else {
          bool first = true;
          for (auto [size, count] : v) {
            if (!first) os << ' ';
            os << size << 'x' << count;
            first = false;
          }
        }
      },
      value_);
  return os.str();
}

Score score_sizes(HeuristicId id, std::span<const std::uint32_t> sizes) {
  switch (id) {
    case HeuristicId::negnumbins:
      return {id, -static_cast<std::int64_t>(sizes.size())};
    case HeuristicId::negentropy:
      return {id, negentropy_of({sizes.begin(), sizes.end()})};
    case HeuristicId::expbinsize: {
      std::int64_t squares = 0;
      std::int64_t total = 0;
      for (std::uint32_t n : sizes) {
        squares += static_cast<std::int64_t>(n) * n;
        total += n;
      }
      return {id, Rational{squares, std::max<std::int64_t>(total, 1)}};
    }
    case HeuristicId::linfinity: {
      std::map<std::uint32_t, std::uint32_t, std::greater<>> levels;
      for (std::uint32_t n : sizes) ++levels[n];
      return {id, LinfinityProfile(levels.begin(), levels.end())};
    }
    case HeuristicId::negnumsingletons:
      return {id, -static_cast<std::int64_t>(std::count(sizes.begin(), sizes.end(), 1u))};
    case HeuristicId::maxbinsize: {
      const std::uint32_t m = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
      return {id, static_cast<std::int64_t>(m)};
    }
    case HeuristicId::maxsimilarity:
    case HeuristicId::maxonediffs:
      break;
  }
  throw std::invalid_argument(std::string(to_string(id)) + " needs bin contents, not just sizes");
}

double bin_similarity(std::span<const Word> bin) {
  if (bin.empty()) return 0.0;
  const int length = bin.front().length();
  std::vector<std::uint32_t> cells(static_cast<std::size_t>(length * kLetters), 0);
  for (const Word& w : bin) {
    for (int pos = 0; pos < length; ++pos) ++cells[static_cast<std::size_t>(pos * kLetters + (w[pos] - 'a'))];
  }
  return similarity_from_cells(cells);
}

std::int64_t one_diff_pairs(std::span<const Word> bin) {
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < bin.size(); ++i) {
    for (std::size_t j = i + 1; j < bin.size(); ++j) {
      if (one_letter_apart(bin[i].str(), bin[j].str())) ++pairs;
    }
  }
  return pairs;
}

Score score(HeuristicId id, const BinDistribution& dist) {
  if (id == HeuristicId::maxsimilarity) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const Bin& b : dist.bins()) worst = std::max(worst, bin_similarity(b.members));
    return {id, worst};
  }
  if (id == HeuristicId::maxonediffs) {
    std::int64_t worst = 0;
    for (const Bin& b : dist.bins()) worst = std::max(worst, one_diff_pairs(b.members));
    return {id, worst};
  }
  const auto sizes = dist.sizes();
  return score_sizes(id, sizes);
}

BinStats bin_stats(std::span<const std::uint32_t> sizes) {
  BinStats st;
  st.bins = sizes.size();
  std::int64_t squares = 0;
  std::int64_t total = 0;
  for (std::uint32_t n : sizes) {
    st.max_bin = std::max(st.max_bin, n);
    squares += static_cast<std::int64_t>(n) * n;
    total += n;
  }
  if (total > 0) {
    st.expected_bin = static_cast<double>(squares) / static_cast<double>(total);
    st.entropy = -negentropy_of({sizes.begin(), sizes.end()});
  }
  return st;
}

// ---------------------------------------------------------------------------

NodeEvaluator::NodeEvaluator(const Game& game, std::span<const std::uint32_t> candidates)
    : game_(game),
      candidates_(candidates),
      counts_(pattern_count(game.word_length()), 0),
      is_candidate_(game.solutions().size(), 0) {
  for (std::uint32_t s : candidates_) is_candidate_[s] = 1;
}

bool NodeEvaluator::is_candidate(std::uint32_t g) const noexcept {
  const auto s = game_.solution_of_guess(g);
  return s && is_candidate_[*s] != 0;
}

void NodeEvaluator::load(std::uint32_t g) {
  for (PatternCode c : touched_) counts_[c] = 0;
  touched_.clear();
  loaded_ = g;
  row_ = game_.table().row(g);
  for (std::uint32_t s : candidates_) {
    const PatternCode c = row_[s];
    if (counts_[c]++ == 0) touched_.push_back(c);
  }
}

std::vector<std::uint32_t> NodeEvaluator::sizes() const {
  std::vector<std::uint32_t> out;
  out.reserve(touched_.size());
  for (PatternCode c : touched_) out.push_back(counts_[c]);
  return out;
}

BinStats NodeEvaluator::stats() const { return bin_stats(sizes()); }

Score NodeEvaluator::score(HeuristicId id) {
  switch (id) {
    case HeuristicId::negnumbins:
      return {id, -static_cast<std::int64_t>(touched_.size())};
    case HeuristicId::expbinsize: {
      std::int64_t squares = 0;
      for (PatternCode c : touched_) squares += static_cast<std::int64_t>(counts_[c]) * counts_[c];
      return {id, Rational{squares, static_cast<std::int64_t>(candidates_.size())}};
    }
    case HeuristicId::maxbinsize: {
      std::uint32_t m = 0;
      for (PatternCode c : touched_) m = std::max(m, counts_[c]);
      return {id, static_cast<std::int64_t>(m)};
    }
    case HeuristicId::negnumsingletons: {
      std::int64_t ones = 0;
      for (PatternCode c : touched_) ones += counts_[c] == 1 ? 1 : 0;
      return {id, -ones};
    }
    case HeuristicId::maxsimilarity:
      return max_similarity();
    case HeuristicId::maxonediffs:
      return max_one_diffs();
    default:
      return score_sizes(id, sizes());
  }
}

Score NodeEvaluator::max_similarity() {
  const int length = game_.word_length();
  const std::size_t stride = static_cast<std::size_t>(length * kLetters);
  if (slot_.empty()) slot_.assign(counts_.size(), -1);
  cells_.assign(touched_.size() * stride, 0);
  for (std::size_t i = 0; i < touched_.size(); ++i) slot_[touched_[i]] = static_cast<std::int32_t>(i);
  const Lexicon& sols = game_.solutions();
  for (std::uint32_t s : candidates_) {
    const std::string& w = sols[s].str();
    std::uint32_t* cell = cells_.data() + static_cast<std::size_t>(slot_[row_[s]]) * stride;
    for (int pos = 0; pos < length; ++pos) ++cell[pos * kLetters + (w[static_cast<std::size_t>(pos)] - 'a')];
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < touched_.size(); ++i) {
    std::span<const std::uint32_t> cells(cells_.data() + i * stride, stride);
    worst = std::max(worst, similarity_from_cells(cells));
  }
  for (PatternCode c : touched_) slot_[c] = -1;
  return {HeuristicId::maxsimilarity, worst};
}

Score NodeEvaluator::max_one_diffs() {
  if (!one_diff_pairs_) {
    one_diff_pairs_.emplace();
    const Lexicon& sols = game_.solutions();
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      for (std::size_t j = i + 1; j < candidates_.size(); ++j) {
        if (one_letter_apart(sols[candidates_[i]].str(), sols[candidates_[j]].str())) {
          one_diff_pairs_->emplace_back(candidates_[i], candidates_[j]);
        }
      }
    }
  }
  // Pairs land in the same bin exactly when both members get the same code.
  if (pair_counts_.empty()) pair_counts_.assign(counts_.size(), 0);
  std::uint32_t worst = 0;
  for (auto [a, b] : *one_diff_pairs_) {
    const PatternCode c = row_[a];
    if (c != row_[b]) continue;
    if (pair_counts_[c] == 0) pair_touched_.push_back(c);
    worst = std::max(worst, ++pair_counts_[c]);
  }
  for (PatternCode c : pair_touched_) pair_counts_[c] = 0;
  pair_touched_.clear();
  return {HeuristicId::maxonediffs, static_cast<std::int64_t>(worst)};
}

// ---------------------------------------------------------------------------

namespace {

void require_inputs(std::span<const std::uint32_t> candidates, std::span<const std::uint32_t> allowed) {
  if (candidates.empty()) throw std::invalid_argument("choose_guess: no candidates remain");
  if (allowed.empty()) throw std::invalid_argument("choose_guess: no allowed guesses");
}

// Guesses that could still be the answer first, each group in list order.
std::vector<std::uint32_t> scan_order(const NodeEvaluator& ev, std::span<const std::uint32_t> allowed) {
  std::vector<std::uint32_t> order(allowed.begin(), allowed.end());
  std::stable_partition(order.begin(), order.end(), [&ev](std::uint32_t g) { return ev.is_candidate(g); });
  return order;
}

}  // namespace

GuessChoice choose_guess(const Game& game, std::span<const std::uint32_t> candidates,
                         std::span<const std::uint32_t> allowed, const HeuristicSpec& spec) {
  require_inputs(candidates, allowed);
  NodeEvaluator ev(game, candidates);
  std::optional<GuessChoice> best;
  std::optional<Score> best_tiebreak;
  std::size_t scanned = 0;
  bool stopped = false;

  for (std::uint32_t g : scan_order(ev, allowed)) {
    ev.load(g);
    ++scanned;
    const bool cand = ev.is_candidate(g);
    if (ev.bin_count() == 1 && !cand) continue;

    Score primary = ev.score(spec.primary);
    std::optional<Score> tiebreak;
    bool take = false;
    if (!best || primary < best->primary) {
      take = true;
    } else if (primary == best->primary) {
      if (cand != best->is_candidate) {
        take = cand;
      } else if (spec.tiebreak) {
        tiebreak = ev.score(*spec.tiebreak);
        take = *tiebreak < *best_tiebreak;
      }
    }
    if (take) {
      if (spec.tiebreak && !tiebreak) tiebreak = ev.score(*spec.tiebreak);
      best = GuessChoice{g, std::move(primary), cand, false, 0};
      best_tiebreak = std::move(tiebreak);
    }
    if (ev.all_singletons()) {
      stopped = true;
      break;
    }
  }
  if (!best) throw std::logic_error("choose_guess: no allowed guess separates the candidates");
  best->early_stop = stopped;
  best->scanned = scanned;
  return *best;
}

Word choose_guess(const Lexicon& candidates, const Lexicon& allowed, const HeuristicSpec& spec) {
  const Game game(candidates, allowed);
  const auto cands = game.all_solutions();
  const auto guesses = game.all_guesses();
  return allowed[choose_guess(game, cands, guesses, spec).guess];
}

std::vector<RankedGuess> rank_guesses(const Game& game, std::span<const std::uint32_t> candidates,
                                      std::span<const std::uint32_t> allowed, const HeuristicSpec& spec) {
  require_inputs(candidates, allowed);
  NodeEvaluator ev(game, candidates);
  std::vector<RankedGuess> out;
  bool stopped = false;
  for (std::uint32_t g : scan_order(ev, allowed)) {
    ev.load(g);
    const bool cand = ev.is_candidate(g);
    if (ev.bin_count() == 1 && !cand) continue;
    RankedGuess r;
    r.guess = g;
    r.primary = ev.score(spec.primary);
    if (spec.tiebreak) r.tiebreak = ev.score(*spec.tiebreak);
    r.is_candidate = cand;
    r.after_stop = stopped;
    r.stats = ev.stats();
    out.push_back(std::move(r));
    if (ev.all_singletons()) stopped = true;
  }
  std::stable_sort(out.begin(), out.end(), [](const RankedGuess& a, const RankedGuess& b) {
    if (a.after_stop != b.after_stop) return !a.after_stop;
    if (a.primary < b.primary) return true;
    if (b.primary < a.primary) return false;
    if (a.is_candidate != b.is_candidate) return a.is_candidate;
    if (a.tiebreak && b.tiebreak) return *a.tiebreak < *b.tiebreak;
    return false;
  });
  return out;
}

}  // namespace wordle
