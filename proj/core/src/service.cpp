#include "wordle/service.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wordle {

namespace {

using nlohmann::json;

constexpr std::size_t kSampleSize = 20;
constexpr std::size_t kMaxTopK = 1000;

json score_json(const Score& s) {
  if (std::holds_alternative<LinfinityProfile>(s.value())) {
    json levels = json::array();
    for (auto [size, count] : std::get<LinfinityProfile>(s.value())) levels.push_back({size, count});
    return levels;
  }
  return s.as_double();
}

HeuristicId heuristic_field(const json& j, const char* key, HeuristicId fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  if (!j[key].is_string()) throw RequestError(400, std::string("'") + key + "' must be a string");
  const auto id = parse_heuristic(j[key].get<std::string>());
  if (!id) throw RequestError(400, "unknown heuristic '" + j[key].get<std::string>() + "'");
  return *id;
}

std::vector<std::pair<std::string, std::string>> history_from_json(const json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.contains("history") || j["history"].is_null()) return out;
  if (!j["history"].is_array()) throw RequestError(400, "'history' must be an array");
  for (const json& row : j["history"]) {
    if (row.is_object() && row.contains("guess") && row.contains("pattern") && row["guess"].is_string() &&
        row["pattern"].is_string()) {
      out.emplace_back(row["guess"].get<std::string>(), row["pattern"].get<std::string>());
    } else if (row.is_array() && row.size() == 2 && row[0].is_string() && row[1].is_string()) {
      out.emplace_back(row[0].get<std::string>(), row[1].get<std::string>());
    } else {
      throw RequestError(400, "history rows must be {\"guess\":..,\"pattern\":..} or [guess, pattern]");
    }
  }
  return out;
}

json parse_body(const std::string& body) {
  try {
    json j = body.empty() ? json::object() : json::parse(body);
    if (!j.is_object()) throw RequestError(400, "request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw RequestError(400, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_history_text(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw RequestError(400, "history entry '" + std::string(item) + "' must look like word=PATTERN");
    }
    out.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
  }
  return out;
}

SuggestRequest suggest_request_from_json(const json& j) {
  SuggestRequest req;
  req.history = history_from_json(j);
  req.spec.primary = heuristic_field(j, "heuristic", req.spec.primary);
  if (j.contains("tiebreak")) {
    if (j["tiebreak"].is_null() || (j["tiebreak"].is_string() &&
                                        (j["tiebreak"].get<std::string>().empty() || j["tiebreak"].get<std::string>() == "none"))) {
      req.spec.tiebreak.reset();
    } else {
      req.spec.tiebreak = heuristic_field(j, "tiebreak", HeuristicId::expbinsize);
    }
  }
  if (j.contains("mode") && !j["mode"].is_null()) {
    if (!j["mode"].is_string()) throw RequestError(400, "'mode' must be a string");
    const auto mode = parse_mode(j["mode"].get<std::string>());
    if (!mode) throw RequestError(400, "unknown mode '" + j["mode"].get<std::string>() + "'");
    req.mode = *mode;
  }
  if (j.contains("top_k") && !j["top_k"].is_null()) {
    if (!j["top_k"].is_number_integer() || j["top_k"].get<std::int64_t>() < 1) {
      throw RequestError(400, "'top_k' must be an integer >= 1");
    }
    req.top_k = static_cast<std::size_t>(std::min<std::int64_t>(j["top_k"].get<std::int64_t>(), kMaxTopK));
  }
  return req;
}

json to_json(const SuggestResponse& response) {
  json suggestions = json::array();
  for (const Suggestion& s : response.suggestions) {
    json item = {
        {"word", s.word},
        {"score", score_json(s.primary)},
        {"bins", s.stats.bins},
        {"max_bin", s.stats.max_bin},
        {"expected_bin", s.stats.expected_bin},
        {"entropy", s.stats.entropy},
        {"consistent", s.consistent},
    };
    if (s.tiebreak) item["tiebreak_score"] = score_json(*s.tiebreak);
    suggestions.push_back(std::move(item));
  }
  return {{"remaining", response.remaining},
          {"suggestions", std::move(suggestions)},
          {"candidates_sample", response.candidates_sample}};
}

Service::Service(Lexicon solutions, Lexicon guesses, std::size_t used_words)
    : game_(std::move(solutions), std::move(guesses)), used_words_(used_words) {
  if (game_.solutions().empty()) throw std::invalid_argument("service needs a nonempty solution list");
  if (game_.guesses().empty()) throw std::invalid_argument("service needs a nonempty guess list");
}

Constraints Service::to_constraints(const std::vector<std::pair<std::string, std::string>>& history) const {
  Constraints c;
  const int length = game_.word_length();
  for (const auto& [guess, pattern] : history) {
    if (!is_valid_word(guess) || static_cast<int>(guess.size()) != length) {
      throw RequestError(400, "'" + guess + "' is not a " + std::to_string(length) + "-letter lowercase word");
    }
    Word w(guess);
    if (!game_.guesses().contains(w)) throw RequestError(400, "'" + guess + "' is not in the guess list");
    try {
      c.history.push_back({std::move(w), parse_pattern(pattern, length)});
    } catch (const PatternError& e) {
      throw RequestError(400, e.what());
    }
  }
  return c;
}

CandidateSet Service::remaining(const Constraints& c) const {
  CandidateSet out;
  const Lexicon& sols = game_.solutions();
  for (std::uint32_t s = 0; s < sols.size(); ++s) {
    if (is_consistent(sols[s], c)) out.push_back(s);
  }
  return out;
}

SuggestResponse Service::suggest(const SuggestRequest& request) const {
  if (request.top_k == 0) throw RequestError(400, "top_k must be at least 1");
  const Constraints c = to_constraints(request.history);
  const CandidateSet cands = remaining(c);
  if (cands.empty()) throw RequestError(422, "no solution is consistent with this history");

  GuessSet legal;
  const Lexicon& guesses = game_.guesses();
  for (std::uint32_t g = 0; g < guesses.size(); ++g) {
    if (is_legal(guesses[g], request.mode, c)) legal.push_back(g);
  }
  if (legal.empty()) throw RequestError(422, "no guess is legal in " + std::string(to_string(request.mode)) + " mode");

  SuggestResponse out;
  out.remaining = cands.size();
  for (std::size_t i = 0; i < cands.size() && i < kSampleSize; ++i) {
    out.candidates_sample.push_back(game_.solutions()[cands[i]].str());
  }
  auto ranked = rank_guesses(game_, cands, legal, request.spec);
  if (ranked.size() > request.top_k) ranked.resize(request.top_k);
  for (RankedGuess& r : ranked) {
    out.suggestions.push_back(
        {guesses[r.guess].str(), std::move(r.primary), std::move(r.tiebreak), r.stats, r.is_candidate});
  }
  return out;
}

json Service::partition_summary(const std::string& guess,
                                const std::vector<std::pair<std::string, std::string>>& history) const {
  const int length = game_.word_length();
  if (!is_valid_word(guess) || static_cast<int>(guess.size()) != length) {
    throw RequestError(400, "'" + guess + "' is not a " + std::to_string(length) + "-letter lowercase word");
  }
  const Constraints c = to_constraints(history);
  const CandidateSet cands = remaining(c);
  if (cands.empty()) throw RequestError(422, "no solution is consistent with this history");

  std::vector<Word> words;
  words.reserve(cands.size());
  for (std::uint32_t s : cands) words.push_back(game_.solutions()[s]);
  const BinDistribution dist = partition(Word(guess), words);

  std::map<std::uint32_t, std::uint32_t> histogram;
  for (const Bin& b : dist.bins()) ++histogram[static_cast<std::uint32_t>(b.size())];
  json hist = json::object();
  for (auto [size, count] : histogram) hist[std::to_string(size)] = count;
  const Bin& largest = dist.largest();
  return {{"guess", guess},
          {"remaining", cands.size()},
          {"bins", dist.bins().size()},
          {"largest", {{"pattern", pattern_string(largest.pattern, length)}, {"size", largest.size()}}},
          {"size_histogram", std::move(hist)},
          {"all_singletons", all_singletons(dist)}};
}

json Service::meta() const {
  json heuristics = json::array();
  for (HeuristicId id : kAllHeuristics) heuristics.push_back(std::string(to_string(id)));
  return {{"lexicons",
           {{{"role", "solutions"}, {"label", game_.solutions().label()}, {"size", game_.solutions().size()}},
            {{"role", "guesses"}, {"label", game_.guesses().label()}, {"size", game_.guesses().size()}}}},
          {"word_length", game_.word_length()},
          {"used_words", used_words_},
          {"heuristics", std::move(heuristics)},
          {"modes", {"regular", "hard", "superhard"}},
          {"defaults", {{"heuristic", "negnumbins"}, {"tiebreak", "expbinsize"}, {"mode", "regular"}}}};
}

std::pair<int, json> Service::handle_suggest(const std::string& body) const {
  try {
    return {200, to_json(suggest(suggest_request_from_json(parse_body(body))))};
  } catch (const RequestError& e) {
    return {e.status(), {{"error", e.what()}}};
  }
}

std::pair<int, json> Service::handle_partition(const std::string& body) const {
  try {
    const json j = parse_body(body);
    if (!j.contains("guess") || !j["guess"].is_string()) throw RequestError(400, "'guess' must be a string");
    return {200, partition_summary(j["guess"].get<std::string>(), history_from_json(j))};
  } catch (const RequestError& e) {
    return {e.status(), {{"error", e.what()}}};
  }
}

}  // namespace wordle
