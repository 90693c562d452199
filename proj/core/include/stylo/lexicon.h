#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/text.h"

namespace stylo {

enum class MatchMode {
  kNormalized,  // compare against Token::normalized
  kSurface,     // compare against the lowercased surface form
};

// A named word list. Entries are stored in the form tokens are compared in.
class MarkerLexicon {
 public:
  // Throws InputError when no entries remain after cleaning.
  MarkerLexicon(std::string name, const std::vector<std::string>& entries,
                MatchMode mode = MatchMode::kNormalized);

  // One entry per line, '#' starts a comment line, blank lines ignored.
  static MarkerLexicon parse(std::string_view contents, std::string name,
                             MatchMode mode = MatchMode::kNormalized);
  static MarkerLexicon load(const std::string& path, std::string name,
                            MatchMode mode = MatchMode::kNormalized);

  const std::string& name() const { return name_; }
  MatchMode match_mode() const { return mode_; }
  const std::set<std::string, std::less<>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

  bool matches(const Token& token) const;

 private:
  std::string name_;
  std::set<std::string, std::less<>> entries_;
  MatchMode mode_;
};

// Names of the built-in lists; these are also the override keys on the
// command line and the file stems written by dump-lexicons.
namespace lexicon_names {
inline constexpr std::string_view kPersonalPronouns = "personal_pronouns";
inline constexpr std::string_view kDemonstratives = "demonstratives";
inline constexpr std::string_view kPrivateVerbs = "private_verbs";
inline constexpr std::string_view kOpinion = "opinion";
inline constexpr std::string_view kArgument = "argument";
inline constexpr std::string_view kClauseMarkers = "clause_markers";
}  // namespace lexicon_names

// All built-in lexicon names, in a fixed order.
const std::vector<std::string_view>& builtin_lexicon_names();
// Plain-text file contents of a built-in lexicon; throws InputError for an
// unknown name.
std::string_view builtin_lexicon_text(std::string_view name);
MarkerLexicon builtin_lexicon(std::string_view name);

// The five families measured per document.
struct MarkerLexicons {
  MarkerLexicon personal_pronouns;
  MarkerLexicon demonstratives;
  MarkerLexicon private_verbs;
  MarkerLexicon opinion;
  MarkerLexicon argument;

  static MarkerLexicons builtin();
};

}  // namespace stylo
