#include "wordle/feedback.hpp"

#include <algorithm>
#include <array>

namespace wordle {

Pattern::Pattern(std::vector<Color> colors) : colors_(std::move(colors)) {
  if (colors_.empty() || colors_.size() > static_cast<std::size_t>(kMaxWordLength)) {
    throw PatternError("pattern length must be 1-" + std::to_string(kMaxWordLength));
  }
}

bool Pattern::all_green() const noexcept {
  return std::all_of(colors_.begin(), colors_.end(), [](Color c) { return c == Color::Green; });
}

int Pattern::count(Color c) const noexcept {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

PatternCode Pattern::code() const noexcept { return encode(*this); }

std::string Pattern::str() const {
  std::string out;
  out.reserve(colors_.size());
  for (Color c : colors_) {
    out.push_back(c == Color::Green ? 'G' : c == Color::Yellow ? 'Y' : 'B');
  }
  return out;
}

PatternCode score_code(std::string_view guess, std::string_view secret) {
  if (guess.size() != secret.size()) {
    throw PatternError("cannot score '" + std::string(guess) + "' against '" +
                       std::string(secret) + "': lengths differ");
  }
  const std::size_t n = guess.size();
  std::array<std::uint8_t, 26> unmatched{};
  std::array<std::uint8_t, kMaxWordLength> digit{};
  for (std::size_t i = 0; i < n; ++i) {
    if (guess[i] == secret[i]) {
      digit[i] = 2;
    } else {
      ++unmatched[static_cast<std::size_t>(secret[i] - 'a')];
    }
  }
  PatternCode code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (digit[i] != 2) {
      auto& left = unmatched[static_cast<std::size_t>(guess[i] - 'a')];
      if (left > 0) {
        digit[i] = 1;
        --left;
      }
    }
    code = static_cast<PatternCode>(code * 3 + digit[i]);
  }
  return code;
}

Pattern score(const Word& guess, const Word& secret) {
  return decode(score_code(guess.str(), secret.str()), guess.length());
}

PatternCode encode(const Pattern& p) {
  std::uint32_t code = 0;
  for (Color c : p.colors()) code = code * 3 + static_cast<std::uint32_t>(c);
  return static_cast<PatternCode>(code);
}

Pattern decode(std::uint32_t code, int length) {
  if (length < 1 || length > kMaxWordLength) {
    throw PatternError("pattern length must be 1-" + std::to_string(kMaxWordLength));
  }
  if (code >= pattern_count(length)) {
    throw PatternError("pattern code " + std::to_string(code) + " out of range for length " +
                       std::to_string(length));
  }
  std::vector<Color> colors(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    colors[static_cast<std::size_t>(i)] = static_cast<Color>(code % 3);
    code /= 3;
  }
  return Pattern(std::move(colors));
}

Pattern parse_pattern(std::string_view text, int expected_length) {
  if (expected_length > 0 && static_cast<int>(text.size()) != expected_length) {
    throw PatternError("pattern '" + std::string(text) + "' must have " +
                       std::to_string(expected_length) + " letters");
  }
  std::vector<Color> colors;
  colors.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'G': colors.push_back(Color::Green); break;
      case 'Y': colors.push_back(Color::Yellow); break;
      case 'B': colors.push_back(Color::Gray); break;
      default:
        throw PatternError("pattern '" + std::string(text) + "' contains '" + std::string(1, ch) +
                           "'; only G, Y and B are allowed");
    }
  }
  return Pattern(std::move(colors));
}

std::string pattern_string(PatternCode code, int length) { return decode(code, length).str(); }

PatternTable::PatternTable(const Lexicon& guesses, const Lexicon& secrets)
    : guesses_(guesses.size()), secrets_(secrets.size()), length_(secrets.word_length()) {
  if (!guesses.empty() && !secrets.empty() && guesses.word_length() != secrets.word_length()) {
    throw PatternError("guess and secret lists have different word lengths");
  }
  codes_.resize(guesses_ * secrets_);
  for (std::size_t g = 0; g < guesses_; ++g) {
    const std::string& gw = guesses[g].str();
    PatternCode* out = codes_.data() + g * secrets_;
    for (std::size_t s = 0; s < secrets_; ++s) out[s] = score_code(gw, secrets[s].str());
  }
}

}  // namespace wordle
