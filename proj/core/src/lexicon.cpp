#include "wordle/lexicon.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace wordle {

bool is_valid_word(std::string_view text) noexcept {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWordLength)) return false;
  for (char c : text) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

Word::Word(std::string_view text) : letters_(text) {
  if (!is_valid_word(text)) {
    throw LexiconError("invalid word '" + std::string(text) + "': expected 1-" +
                       std::to_string(kMaxWordLength) + " lowercase letters a-z");
  }
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Lexicon::Lexicon(std::vector<Word> words, std::string label)
    : words_(std::move(words)), label_(std::move(label)) {
  if (!words_.empty()) word_length_ = words_.front().length();
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    if (w.length() != word_length_) {
      throw LexiconError("word '" + w.str() + "' has length " + std::to_string(w.length()) +
                         ", expected " + std::to_string(word_length_));
    }
    if (!index_.emplace(w.str(), i).second) {
      throw LexiconError("duplicate word '" + w.str() + "'");
    }
  }
}

std::optional<std::size_t> Lexicon::index_of(const Word& w) const {
  auto it = index_.find(w.str());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Lexicon Lexicon::with_label(std::string label) const {
  Lexicon copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Lexicon parse_lexicon(std::istream& in, std::string label) {
  std::vector<Word> words;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t line_no = 0;
  int length = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!is_valid_word(line)) {
      throw LexiconError("line " + std::to_string(line_no) + ": malformed word '" + line + "'");
    }
    if (length == 0) {
      length = static_cast<int>(line.size());
    } else if (static_cast<int>(line.size()) != length) {
      throw LexiconError("line " + std::to_string(line_no) + ": word '" + line + "' has length " +
                         std::to_string(line.size()) + ", expected " + std::to_string(length));
    }
    if (auto [it, fresh] = seen.emplace(line, line_no); !fresh) {
      throw LexiconError("line " + std::to_string(line_no) + ": duplicate word '" + line +
                         "' (first on line " + std::to_string(it->second) + ")");
    }
    words.emplace_back(line);
  }
  return Lexicon(std::move(words), std::move(label));
}

Lexicon load_lexicon(const std::filesystem::path& path, std::optional<std::string> label) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot open word list '" + path.string() + "'");
  try {
    return parse_lexicon(in, label.value_or(path.stem().string()));
  } catch (const LexiconError& e) {
    throw LexiconError(path.string() + ": " + e.what());
  }
}

void write_lexicon(std::ostream& out, const Lexicon& lex) {
  for (const Word& w : lex) out << w.str() << '\n';
}

void save_lexicon(const std::filesystem::path& path, const Lexicon& lex) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LexiconError("cannot write word list '" + path.string() + "'");
  write_lexicon(out, lex);
}

Lexicon subtract(const Lexicon& lex, const std::unordered_set<std::string>& removed) {
  std::vector<Word> kept;
  kept.reserve(lex.size());
  for (const Word& w : lex) {
    if (!removed.contains(w.str())) kept.push_back(w);
  }
  return Lexicon(std::move(kept), lex.label());
}

Lexicon subtract(const Lexicon& lex, const std::vector<Word>& removed) {
  std::unordered_set<std::string> set;
  for (const Word& w : removed) set.insert(w.str());
  return subtract(lex, set);
}

}  // namespace wordle
