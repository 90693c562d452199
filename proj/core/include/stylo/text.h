#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stylo {

enum class TokenKind { kWord, kPunctuation };

struct Token {
  std::string surface;
  std::string normalized;
  TokenKind kind = TokenKind::kWord;

  bool is_word() const { return kind == TokenKind::kWord; }
};

struct Sentence {
  std::vector<Token> tokens;
  // Characters (code points) over all tokens; whitespace is never counted.
  std::size_t char_count = 0;
};

// Half-open byte range [begin, end) into the segmented text.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

// Words after which a period does not end a sentence ("Dr.", "e.g.").
// Entries are stored lowercased with trailing periods removed.
class Abbreviations {
 public:
  Abbreviations() = default;
  explicit Abbreviations(const std::vector<std::string>& entries);

  static const Abbreviations& builtin();
  // One abbreviation per line; blank lines and '#' comments are skipped.
  static Abbreviations parse(std::string_view contents);
  static Abbreviations load(const std::string& path);

  bool contains(std::string_view word) const;
  const std::set<std::string, std::less<>>& entries() const { return entries_; }

 private:
  std::set<std::string, std::less<>> entries_;
};

// Plain-text form of the built-in abbreviation list.
std::string_view builtin_abbreviations_text();

// Splits text into sentences. A boundary is a run of '.', '!' or '?'
// (plus closing quotes/brackets) followed by whitespace and an uppercase
// letter or digit, optionally behind opening quotes. A period whose
// preceding word is a guarded abbreviation is not a boundary. Spans are
// trimmed of surrounding whitespace and never empty.
std::vector<SentenceSpan> segment_sentences(
    std::string_view text,
    const Abbreviations& abbreviations = Abbreviations::builtin());

// Words are maximal runs of letters, digits and inner apostrophes; every
// other non-space character becomes a one-character punctuation token.
// Bytes >= 0x80 are treated as letters so UTF-8 passes through intact.
std::vector<Token> tokenize(std::string_view sentence_text);

// Lowercases ASCII and strips inflectional suffixes (-s, -es, -ies, -ing,
// -ed, with doubled-consonant repair) until no rule applies. Only words
// made entirely of ASCII letters are stripped. Idempotent.
std::string normalize(std::string_view surface);

// Number of UTF-8 code points in s.
std::size_t utf8_length(std::string_view s);

Sentence make_sentence(std::string_view sentence_text);

struct AnalyzedDocument {
  std::string id;
  std::vector<Sentence> sentences;

  std::size_t word_count() const;
};

AnalyzedDocument analyze_text(
    std::string id, std::string_view text,
    const Abbreviations& abbreviations = Abbreviations::builtin());

}  // namespace stylo
