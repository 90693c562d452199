#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/corpus.h"
#include "stylo/lexicon.h"
#include "stylo/text.h"

namespace stylo {

// Per-document marker rates, per 1000 word tokens, and mean word length.
struct MarkerVector {
  double personal_pronoun_rate = 0.0;
  double demonstrative_rate = 0.0;
  double private_verb_rate = 0.0;
  double opinion_argument_rate = 0.0;
  double chars_per_word = 0.0;

  static constexpr std::size_t kSize = 5;
  static const std::array<std::string_view, kSize>& names();
  std::array<double, kSize> values() const;
};

// Throws AnalysisError if the document has no word tokens. A token matching
// both the opinion and the argument list is counted once.
MarkerVector measure_markers(const AnalyzedDocument& doc,
                             const MarkerLexicons& lexicons);

// Estimated clauses = 1 + clause-boundary markers in the sentence.
std::size_t estimate_clauses(const Sentence& sentence,
                             const MarkerLexicon& clause_markers);

// 1 when the estimated clause count reaches min_clauses.
bool multi_clause_bit(const Sentence& sentence,
                      const MarkerLexicon& clause_markers,
                      std::size_t min_clauses = 2);

// A named per-sentence binary feature.
struct SentenceFeature {
  std::string name;
  std::function<bool(const Sentence&)> score;
};

SentenceFeature make_multi_clause_feature(MarkerLexicon clause_markers,
                                          std::size_t min_clauses = 2);

// One bit per sentence, document order.
struct SentenceFeatureTrack {
  std::string doc_id;
  std::vector<std::uint8_t> bits;
};

SentenceFeatureTrack sentence_feature_track(const AnalyzedDocument& doc,
                                            const SentenceFeature& feature);

// Segments, tokenizes and scores every document; parallel across documents
// when threads > 1. Result index i belongs to corpus document i.
std::vector<SentenceFeatureTrack> corpus_tracks(
    const Corpus& corpus, const SentenceFeature& feature,
    const Abbreviations& abbreviations = Abbreviations::builtin(),
    unsigned threads = 1);

// Sorted, de-duplicated normalized word ids per document over a shared
// vocabulary.
class DocumentFrequencies {
 public:
  DocumentFrequencies(const Corpus& corpus,
                      const Abbreviations& abbreviations = Abbreviations::builtin(),
                      unsigned threads = 1);

  std::size_t document_count() const { return doc_terms_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  const std::vector<std::uint32_t>& terms(std::size_t doc) const {
    return doc_terms_[doc];
  }

 private:
  std::vector<std::string> vocabulary_;  // sorted
  std::vector<std::vector<std::uint32_t>> doc_terms_;
};

enum class Direction { kOver, kUnder };
std::string_view to_string(Direction direction);

struct TypicalWordRow {
  std::string word;
  double chi_squared = 0.0;
  Direction direction = Direction::kOver;
  std::size_t df_in = 0;
  std::size_t df_out = 0;
};

// Every word with total document frequency >= min_df scored against the
// category/complement split, both directions, ordered by descending
// chi-squared then word. Words whose table has a zero margin score 0 and
// are reported as kUnder. The complement is every document carrying a
// different label of the same kind; unlabeled documents take no part.
// Throws AnalysisError when the category or its complement is empty.
std::vector<TypicalWordRow> word_associations(const Corpus& corpus,
                                              const DocumentFrequencies& df,
                                              LabelKind kind,
                                              std::string_view category,
                                              std::size_t min_df);

// Over-represented words only, first top_k of word_associations.
std::vector<TypicalWordRow> typical_words(const Corpus& corpus,
                                          const DocumentFrequencies& df,
                                          LabelKind kind,
                                          std::string_view category,
                                          std::size_t min_df,
                                          std::size_t top_k);

}  // namespace stylo
