#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordle/lexicon.hpp"

namespace wordle {

enum class Color : std::uint8_t { Gray = 0, Yellow = 1, Green = 2 };

/// Base-3 pattern code, most significant digit first:
/// code = sum d_i * 3^(L-1-i) with Gray=0, Yellow=1, Green=2.
using PatternCode = std::uint16_t;

class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of distinct patterns for words of `length` letters (3^length).
constexpr std::uint32_t pattern_count(int length) noexcept {
  std::uint32_t n = 1;
  for (int i = 0; i < length; ++i) n *= 3;
  return n;
}

constexpr PatternCode all_green_code(int length) noexcept {
  return static_cast<PatternCode>(pattern_count(length) - 1);
}

/// One color response. Text form uses G, Y and B (gray).
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Color> colors);

  const std::vector<Color>& colors() const noexcept { return colors_; }
  int length() const noexcept { return static_cast<int>(colors_.size()); }
  Color operator[](int i) const noexcept { return colors_[static_cast<std::size_t>(i)]; }

  bool all_green() const noexcept;
  int count(Color c) const noexcept;

  PatternCode code() const noexcept;
  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Color> colors_;
};

/// Color response for `guess` against `secret`. Greens are assigned first and
/// consume their secret letters; yellows are then assigned left to right,
/// once per remaining occurrence in the secret.
Pattern score(const Word& guess, const Word& secret);
PatternCode score_code(std::string_view guess, std::string_view secret);

PatternCode encode(const Pattern& p);
/// Throws PatternError when `code` is outside [0, 3^length).
Pattern decode(std::uint32_t code, int length);

/// Parses "GYB..." text. Throws PatternError on bad characters; when
/// `expected_length` is positive the length must match.
Pattern parse_pattern(std::string_view text, int expected_length = 0);
std::string pattern_string(PatternCode code, int length);

/// Precomputed guess x secret pattern codes. Row-major by guess.
class PatternTable {
 public:
  PatternTable() = default;
  PatternTable(const Lexicon& guesses, const Lexicon& secrets);

  std::size_t guess_count() const noexcept { return guesses_; }
  std::size_t secret_count() const noexcept { return secrets_; }
  int word_length() const noexcept { return length_; }

  PatternCode operator()(std::size_t guess, std::size_t secret) const noexcept {
    return codes_[guess * secrets_ + secret];
  }
  std::span<const PatternCode> row(std::size_t guess) const noexcept {
    return {codes_.data() + guess * secrets_, secrets_};
  }

 private:
  std::size_t guesses_ = 0;
  std::size_t secrets_ = 0;
  int length_ = kDefaultWordLength;
  std::vector<PatternCode> codes_;
};

}  // namespace wordle
