#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wordle/game.hpp"
#include "wordle/heuristics.hpp"
#include "wordle/strategy.hpp"

namespace wordle {

/// A request the service rejects; `status` is the HTTP code to answer with
/// (400 malformed, 422 contradictory history).
class RequestError : public std::runtime_error {
 public:
  RequestError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

struct SuggestRequest {
  std::vector<std::pair<std::string, std::string>> history;  // (guess, "GYB..")
  HeuristicSpec spec{HeuristicId::negnumbins, HeuristicId::expbinsize};
  Mode mode = Mode::regular;
  std::size_t top_k = 10;
};

struct Suggestion {
  std::string word;
  Score primary;
  std::optional<Score> tiebreak;
  BinStats stats;
  bool consistent = false;
};

struct SuggestResponse {
  std::size_t remaining = 0;
  std::vector<Suggestion> suggestions;
  std::vector<std::string> candidates_sample;  // first 20 remaining
};

/// Parses "raise=BYBBG,close=GBBYB"; empty text gives an empty history.
/// Throws RequestError(400).
std::vector<std::pair<std::string, std::string>> parse_history_text(std::string_view text);

/// Stateless query layer over one solution list and one guess list.
class Service {
 public:
  Service(Lexicon solutions, Lexicon guesses, std::size_t used_words = 0);

  const Game& game() const noexcept { return game_; }

  SuggestResponse suggest(const SuggestRequest& request) const;
  nlohmann::json partition_summary(const std::string& guess,
                                   const std::vector<std::pair<std::string, std::string>>& history) const;
  nlohmann::json meta() const;

  /// JSON entry points used by the HTTP server: (status, body).
  std::pair<int, nlohmann::json> handle_suggest(const std::string& body) const;
  std::pair<int, nlohmann::json> handle_partition(const std::string& body) const;

 private:
  Constraints to_constraints(const std::vector<std::pair<std::string, std::string>>& history) const;
  CandidateSet remaining(const Constraints& c) const;

  Game game_;
  std::size_t used_words_;
};

nlohmann::json to_json(const SuggestResponse& response);
SuggestRequest suggest_request_from_json(const nlohmann::json& j);

}  // namespace wordle
