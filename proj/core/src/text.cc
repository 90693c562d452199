#include "stylo/text.h"

#include <algorithm>

#include "io.h"

namespace stylo {
namespace {

constexpr std::string_view kBuiltinAbbreviations = R"(# Words after which a period does not end a sentence.
# One per line, case-insensitive, trailing period optional.
mr
mrs
ms
messrs
dr
prof
rev
hon
st
jr
sr
gen
col
lt
sgt
capt
gov
sen
rep
mt
ave
dept
est
approx
fig
vol
no
nos
cf
vs
e.g
i.e
a.m
p.m
u.s
u.k
jan
feb
mar
apr
jun
jul
aug
sep
sept
oct
nov
dec
)";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_ascii_alpha(char c) { return is_ascii_upper(c) || is_ascii_lower(c); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_alnum(char c) { return is_ascii_alpha(c) || is_digit(c) || is_high(c); }
bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }
bool is_opener(char c) { return c == '"' || c == '\'' || c == '(' || c == '['; }
char to_lower(char c) { return is_ascii_upper(c) ? char(c - 'A' + 'a') : c; }

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), to_lower);
  return out;
}

std::string clean_abbreviation(std::string_view entry) {
  auto word = detail::trim(entry);
  while (!word.empty() && word.back() == '.') word.remove_suffix(1);
  return lowercase(word);
}

// The word directly before the period at `dot`: letters and periods back
// to the previous non-word character.
std::string_view word_before(std::string_view text, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > 0 && (is_ascii_alpha(text[begin - 1]) || text[begin - 1] == '.')) {
    --begin;
  }
  return text.substr(begin, dot - begin);
}

std::size_t trimmed_end(std::string_view text, std::size_t begin,
                        std::size_t end) {
  while (end > begin && is_space(text[end - 1])) --end;
  return end;
}

// Suffix stripping helpers. Words reaching these are lowercase ASCII.
bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool has_vowel(std::string_view stem) {
  for (std::size_t i = 0; i < stem.size(); ++i) {
    if (is_vowel(stem[i]) || (stem[i] == 'y' && i > 0)) return true;
  }
  return false;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Stem endings that English spells with a silent e: "danc", "serv",
// "argu", "seiz", "judg", "charg", and vowel + s as in "clos", "caus".
bool wants_silent_e(std::string_view stem) {
  const std::size_t n = stem.size();
  const char last = stem[n - 1];
  const char prev = n >= 2 ? stem[n - 2] : '\0';
  switch (last) {
    case 'c':
    case 'v':
      return true;
    case 'u':
      return prev != 'u';
    case 'z':
      return prev != 'z';
    case 'g':
      return prev == 'd' || prev == 'r';
    case 's':
      if (!is_vowel(prev)) return false;
      // "focus", "bonus" keep their bare form.
      return !(prev == 'u' && n >= 3 && !is_vowel(stem[n - 3]));
    default:
      return false;
  }
}

// Undo consonant doubling ("runn" -> "run") or restore a silent e, either on
// short consonant-vowel-consonant stems ("hop" -> "hope") or after endings
// that need one ("clos" -> "close").
std::string repair_stem(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z') {
    stem.pop_back();
    return stem;
  }
  if (n == 3 && !is_vowel(stem[0]) && is_vowel(stem[1]) &&
      !is_vowel(stem[2]) && stem[2] != 'w' && stem[2] != 'x' &&
      stem[2] != 'y') {
    stem.push_back('e');
  } else if (n >= 2 && wants_silent_e(stem)) {
    stem.push_back('e');
  }
  return stem;
}

// One rule application; returns the input unchanged when nothing applies.
std::string strip_once(const std::string& w) {
  const std::string_view v = w;
  if (ends_with(v, "ies") && v.size() >= 5) {
    return std::string(v.substr(0, v.size() - 3)) + "y";
  }
  if (ends_with(v, "sses")) return std::string(v.substr(0, v.size() - 2));
  if (ends_with(v, "es") && v.size() >= 5) {
    const auto stem = v.substr(0, v.size() - 2);
    if (ends_with(stem, "x") || ends_with(stem, "zz") || ends_with(stem, "ch") ||
        ends_with(stem, "sh")) {
      return std::string(stem);
    }
  }
  if (ends_with(v, "s") && !ends_with(v, "ss") && !ends_with(v, "us") &&
      !ends_with(v, "is") && v.size() >= 4) {
    const auto stem = v.substr(0, v.size() - 1);
    if (has_vowel(stem)) return std::string(stem);
  }
  if (ends_with(v, "ing") && v.size() >= 6) {
    const auto stem = v.substr(0, v.size() - 3);
    if (has_vowel(stem)) return repair_stem(std::string(stem));
  }
  if (ends_with(v, "ed") && !ends_with(v, "eed") && v.size() >= 5) {
    const auto stem = v.substr(0, v.size() - 2);
    if (has_vowel(stem)) return repair_stem(std::string(stem));
  }
  return w;
}

}  // namespace

Abbreviations::Abbreviations(const std::vector<std::string>& entries) {
  for (const auto& entry : entries) {
    auto cleaned = clean_abbreviation(entry);
    if (!cleaned.empty()) entries_.insert(std::move(cleaned));
  }
}

const Abbreviations& Abbreviations::builtin() {
  static const Abbreviations instance = parse(kBuiltinAbbreviations);
  return instance;
}

Abbreviations Abbreviations::parse(std::string_view contents) {
  return Abbreviations(detail::list_entries(contents));
}

Abbreviations Abbreviations::load(const std::string& path) {
  return parse(detail::read_file(path));
}

bool Abbreviations::contains(std::string_view word) const {
  return entries_.find(clean_abbreviation(word)) != entries_.end();
}

std::string_view builtin_abbreviations_text() { return kBuiltinAbbreviations; }

std::vector<SentenceSpan> segment_sentences(std::string_view text,
                                            const Abbreviations& abbreviations) {
  std::vector<SentenceSpan> spans;
  const std::size_t n = text.size();
  std::size_t start = 0;
  while (start < n && is_space(text[start])) ++start;

  std::size_t i = start;
  while (i < n) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && is_terminal(text[j])) ++j;
    const std::size_t run_end = j;
    while (j < n && is_closer(text[j])) ++j;
    if (j >= n || !is_space(text[j])) {
      i = std::max(j, i + 1);
      continue;
    }
    std::size_t next = j;
    while (next < n && is_space(text[next])) ++next;
    std::size_t probe = next;
    while (probe < n && is_opener(text[probe])) ++probe;
    const bool capital_follows = probe < n && is_ascii_upper(text[probe]);
    const bool guarded = run_end - i == 1 && text[i] == '.' &&
                         abbreviations.contains(word_before(text, i));
    if (capital_follows && !guarded) {
      spans.push_back({start, trimmed_end(text, start, j)});
      start = next;
    }
    i = next;
  }
  if (start < n) {
    const std::size_t end = trimmed_end(text, start, n);
    if (end > start) spans.push_back({start, end});
  }
  return spans;
}

std::vector<Token> tokenize(std::string_view sentence_text) {
  std::vector<Token> tokens;
  auto punctuation = [&](std::string_view s) {
    tokens.push_back({std::string(s), std::string(s), TokenKind::kPunctuation});
  };
  const std::size_t n = sentence_text.size();
  std::size_t i = 0;
  while (i < n) {
    const char c = sentence_text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (!is_alnum(c) && c != '\'') {
      punctuation(sentence_text.substr(i, 1));
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && (is_alnum(sentence_text[j]) || sentence_text[j] == '\'')) ++j;
    // Apostrophes at either edge are quotes, not part of the word.
    std::size_t word_begin = i;
    std::size_t word_end = j;
    while (word_begin < word_end && sentence_text[word_begin] == '\'') ++word_begin;
    while (word_end > word_begin && sentence_text[word_end - 1] == '\'') --word_end;
    for (std::size_t k = i; k < word_begin; ++k) punctuation("'");
    if (word_end > word_begin) {
      const auto surface = sentence_text.substr(word_begin, word_end - word_begin);
      tokens.push_back({std::string(surface), normalize(surface), TokenKind::kWord});
    }
    for (std::size_t k = std::max(word_end, word_begin); k < j; ++k) punctuation("'");
    i = j;
  }
  return tokens;
}

std::string normalize(std::string_view surface) {
  std::string word = lowercase(surface);
  if (word.empty() || !std::all_of(word.begin(), word.end(), is_ascii_lower)) {
    return word;
  }
  for (;;) {
    std::string stripped = strip_once(word);
    if (stripped == word) return word;
    word = std::move(stripped);
  }
}

std::size_t utf8_length(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

Sentence make_sentence(std::string_view sentence_text) {
  Sentence sentence;
  sentence.tokens = tokenize(sentence_text);
  for (const auto& token : sentence.tokens) {
    sentence.char_count += utf8_length(token.surface);
  }
  return sentence;
}

std::size_t AnalyzedDocument::word_count() const {
  std::size_t count = 0;
  for (const auto& sentence : sentences) {
    count += static_cast<std::size_t>(std::count_if(
        sentence.tokens.begin(), sentence.tokens.end(),
        [](const Token& t) { return t.is_word(); }));
  }
  return count;
}

AnalyzedDocument analyze_text(std::string id, std::string_view text,
                              const Abbreviations& abbreviations) {
  AnalyzedDocument doc{std::move(id), {}};
  const auto spans = segment_sentences(text, abbreviations);
  doc.sentences.reserve(spans.size());
  for (const auto& span : spans) {
    doc.sentences.push_back(make_sentence(text.substr(span.begin, span.size())));
  }
  return doc;
}

}  // namespace stylo
