#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace wordle {

// Longest supported word. Pattern codes must fit in 16 bits (3^10 = 59049).
inline constexpr int kMaxWordLength = 10;
inline constexpr int kDefaultWordLength = 5;

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fixed-length lowercase a-z word.
class Word {
 public:
  Word() = default;
  /// Throws LexiconError unless `text` is 1..kMaxWordLength letters in a-z.
  explicit Word(std::string_view text);

  const std::string& str() const noexcept { return letters_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  char operator[](int i) const noexcept { return letters_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// True when `text` would construct a valid Word.
bool is_valid_word(std::string_view text) noexcept;

/// Ordered list of distinct, equal-length words. Position in the list is
/// significant: it is the final tie-break when choosing guesses.
class Lexicon {
 public:
  Lexicon() = default;
  /// Throws LexiconError on duplicates or mixed lengths.
  Lexicon(std::vector<Word> words, std::string label = {});

  const std::vector<Word>& words() const noexcept { return words_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  /// Word length shared by every entry; kDefaultWordLength when empty.
  int word_length() const noexcept { return word_length_; }

  std::optional<std::size_t> index_of(const Word& w) const;
  bool contains(const Word& w) const { return index_.contains(w.str()); }

  Lexicon with_label(std::string label) const;

 private:
  std::vector<Word> words_;
  std::string label_;
  int word_length_ = kDefaultWordLength;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Parses one word per line (LF; a trailing CR is tolerated). Blank lines
/// are rejected except for nothing after the final newline. Errors name the
/// 1-based line.
Lexicon parse_lexicon(std::istream& in, std::string label = {});

/// Loads a word-list file. The label defaults to the file stem.
Lexicon load_lexicon(const std::filesystem::path& path, std::optional<std::string> label = {});

/// Writes one word per line, LF terminated, final newline included.
void write_lexicon(std::ostream& out, const Lexicon& lex);
void save_lexicon(const std::filesystem::path& path, const Lexicon& lex);

/// All words of `lex` not in `removed`, original order kept.
Lexicon subtract(const Lexicon& lex, const std::unordered_set<std::string>& removed);
Lexicon subtract(const Lexicon& lex, const std::vector<Word>& removed);

}  // namespace wordle
