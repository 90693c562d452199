#include "stylo/features.h"

#include <algorithm>
#include <unordered_map>

#include "parallel.h"
#include "stylo/error.h"
#include "stylo/stats.h"

namespace stylo {

const std::array<std::string_view, MarkerVector::kSize>& MarkerVector::names() {
  static constexpr std::array<std::string_view, kSize> kNames{
      "personal_pronouns", "demonstratives", "private_verbs",
      "opinion_argument", "chars_per_word"};
  return kNames;
}

std::array<double, MarkerVector::kSize> MarkerVector::values() const {
  return {personal_pronoun_rate, demonstrative_rate, private_verb_rate,
          opinion_argument_rate, chars_per_word};
}

MarkerVector measure_markers(const AnalyzedDocument& doc,
                             const MarkerLexicons& lexicons) {
  std::size_t words = 0, chars = 0;
  std::size_t pronouns = 0, demonstratives = 0, private_verbs = 0, opinion = 0;
  for (const auto& sentence : doc.sentences) {
    for (const auto& token : sentence.tokens) {
      if (!token.is_word()) continue;
      ++words;
      chars += utf8_length(token.surface);
      pronouns += lexicons.personal_pronouns.matches(token);
      demonstratives += lexicons.demonstratives.matches(token);
      private_verbs += lexicons.private_verbs.matches(token);
      opinion += lexicons.opinion.matches(token) || lexicons.argument.matches(token);
    }
  }
  if (words == 0) {
    throw AnalysisError("document '" + doc.id +
                        "' has no word tokens; marker rates are undefined");
  }
  const double per_mille = 1000.0 / static_cast<double>(words);
  return {static_cast<double>(pronouns) * per_mille,
          static_cast<double>(demonstratives) * per_mille,
          static_cast<double>(private_verbs) * per_mille,
          static_cast<double>(opinion) * per_mille,
          static_cast<double>(chars) / static_cast<double>(words)};
}

std::size_t estimate_clauses(const Sentence& sentence,
                             const MarkerLexicon& clause_markers) {
  std::size_t clauses = 1;
  for (const auto& token : sentence.tokens) clauses += clause_markers.matches(token);
  return clauses;
}

bool multi_clause_bit(const Sentence& sentence,
                      const MarkerLexicon& clause_markers,
                      std::size_t min_clauses) {
  return estimate_clauses(sentence, clause_markers) >= min_clauses;
}

SentenceFeature make_multi_clause_feature(MarkerLexicon clause_markers,
                                          std::size_t min_clauses) {
  return {"multi_clause>=" + std::to_string(min_clauses),
          [markers = std::move(clause_markers), min_clauses](const Sentence& s) {
            return multi_clause_bit(s, markers, min_clauses);
          }};
}

SentenceFeatureTrack sentence_feature_track(const AnalyzedDocument& doc,
                                            const SentenceFeature& feature) {
  SentenceFeatureTrack track{doc.id, {}};
  track.bits.reserve(doc.sentences.size());
  for (const auto& sentence : doc.sentences) {
    track.bits.push_back(feature.score(sentence) ? 1 : 0);
  }
  return track;
}

std::vector<SentenceFeatureTrack> corpus_tracks(const Corpus& corpus,
                                                const SentenceFeature& feature,
                                                const Abbreviations& abbreviations,
                                                unsigned threads) {
  std::vector<SentenceFeatureTrack> tracks(corpus.size());
  detail::parallel_for(corpus.size(), threads, [&](std::size_t i) {
    const auto& doc = corpus[i];
    tracks[i] = sentence_feature_track(analyze_text(doc.id, doc.text, abbreviations),
                                       feature);
  });
  return tracks;
}

DocumentFrequencies::DocumentFrequencies(const Corpus& corpus,
                                         const Abbreviations& abbreviations,
                                         unsigned threads) {
  std::vector<std::vector<std::string>> words(corpus.size());
  detail::parallel_for(corpus.size(), threads, [&](std::size_t i) {
    const auto doc = analyze_text(corpus[i].id, corpus[i].text, abbreviations);
    auto& out = words[i];
    for (const auto& sentence : doc.sentences) {
      for (const auto& token : sentence.tokens) {
        if (token.is_word()) out.push_back(token.normalized);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  });

  for (const auto& doc_words : words) {
    vocabulary_.insert(vocabulary_.end(), doc_words.begin(), doc_words.end());
  }
  std::sort(vocabulary_.begin(), vocabulary_.end());
  vocabulary_.erase(std::unique(vocabulary_.begin(), vocabulary_.end()),
                    vocabulary_.end());

  std::unordered_map<std::string_view, std::uint32_t> ids;
  ids.reserve(vocabulary_.size());
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    ids.emplace(vocabulary_[i], static_cast<std::uint32_t>(i));
  }
  doc_terms_.resize(words.size());
  for (std::size_t d = 0; d < words.size(); ++d) {
    auto& terms = doc_terms_[d];
    terms.reserve(words[d].size());
    for (const auto& w : words[d]) terms.push_back(ids.at(w));
  }
}

std::string_view to_string(Direction direction) {
  return direction == Direction::kOver ? "over" : "under";
}

std::vector<TypicalWordRow> word_associations(const Corpus& corpus,
                                              const DocumentFrequencies& df,
                                              LabelKind kind,
                                              std::string_view category,
                                              std::size_t min_df) {
  if (df.document_count() != corpus.size()) {
    throw AnalysisError("document frequencies were built for a different corpus");
  }
  if (min_df < 1) throw AnalysisError("min_df must be at least 1");
  const auto& vocab = df.vocabulary();
  std::vector<std::uint64_t> df_in(vocab.size(), 0), df_out(vocab.size(), 0);
  std::uint64_t n_in = 0, n_out = 0;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    const auto& label = corpus[d].label(kind);
    if (!label) continue;
    const bool inside = *label == category;
    (inside ? n_in : n_out) += 1;
    auto& counts = inside ? df_in : df_out;
    for (const auto term : df.terms(d)) ++counts[term];
  }
  if (n_in == 0) {
    throw AnalysisError("category '" + std::string(category) + "' has no documents");
  }
  if (n_out == 0) {
    throw AnalysisError("category '" + std::string(category) +
                        "' has an empty complement");
  }

  std::vector<TypicalWordRow> rows;
  for (std::size_t w = 0; w < vocab.size(); ++w) {
    const auto a = df_in[w], c = df_out[w];
    if (a + c < min_df) continue;
    const Contingency2x2 table{a, n_in - a, c, n_out - c};
    const bool zero_margin = table.a + table.c == 0 || table.b + table.d == 0;
    TypicalWordRow row;
    row.word = vocab[w];
    row.df_in = a;
    row.df_out = c;
    row.chi_squared = zero_margin ? 0.0 : chi_squared_2x2(table);
    // Over-represented when a exceeds its expectation n_in * (a + c) / N.
    const bool over = a * (n_in + n_out) > (a + c) * n_in;
    row.direction = over && row.chi_squared > 0.0 ? Direction::kOver : Direction::kUnder;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const TypicalWordRow& x, const TypicalWordRow& y) {
    if (x.chi_squared != y.chi_squared) return x.chi_squared > y.chi_squared;
    return x.word < y.word;
  });
  return rows;
}

std::vector<TypicalWordRow> typical_words(const Corpus& corpus,
                                          const DocumentFrequencies& df,
                                          LabelKind kind,
                                          std::string_view category,
                                          std::size_t min_df,
                                          std::size_t top_k) {
  auto rows = word_associations(corpus, df, kind, category, min_df);
  std::vector<TypicalWordRow> out;
  for (auto& row : rows) {
    if (out.size() >= top_k) break;
    if (row.direction == Direction::kOver) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace stylo
