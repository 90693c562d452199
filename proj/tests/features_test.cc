#include "stylo/features.h"

#include <gtest/gtest.h>

#include <random>

#include "stylo/error.h"
#include "stylo/lexicon.h"
#include "stylo/stats.h"
#include "support/oracles.h"
#include "support/temp_dir.h"

namespace stylo {
namespace {

MarkerLexicons lexicons_with_private(std::vector<std::string> private_verbs) {
  auto lex = MarkerLexicons::builtin();
  lex.private_verbs = MarkerLexicon("private_verbs", private_verbs);
  return lex;
}

TEST(LexiconTest, ParsesEntriesAndComments) {
  EXPECT_EQ(MarkerLexicon::parse("think\nfeel\n", "pv").size(), 2u);
  EXPECT_THROW(MarkerLexicon::parse("# only\n# comments\n\n", "pv"), InputError);
}

TEST(LexiconTest, NormalizedModeNormalizesEntries) {
  const auto lex = MarkerLexicon::parse("Thinks\n", "pv");
  EXPECT_EQ(lex.entries(), (std::set<std::string, std::less<>>{"think"}));
  const auto surface = MarkerLexicon::parse("Thinks\n", "pv", MatchMode::kSurface);
  EXPECT_EQ(surface.entries(), (std::set<std::string, std::less<>>{"thinks"}));
}

TEST(LexiconTest, MatchModes) {
  const auto tokens = tokenize("She thinks");
  const auto normalized = MarkerLexicon::parse("think", "pv");
  const auto surface = MarkerLexicon::parse("think", "pv", MatchMode::kSurface);
  EXPECT_TRUE(normalized.matches(tokens[1]));
  EXPECT_FALSE(surface.matches(tokens[1]));
}

TEST(LexiconTest, LoadFromFile) {
  testing::TempDir dir;
  const auto path = dir.write("pv.txt", "# private verbs\nthink\n\n  feel  \n");
  EXPECT_EQ(MarkerLexicon::load(path.string(), "pv").size(), 2u);
  EXPECT_THROW(MarkerLexicon::load((dir.path() / "missing.txt").string(), "pv"), InputError);
}

TEST(LexiconTest, BuiltinsExistAndAreNonEmpty) {
  for (const auto name : builtin_lexicon_names()) {
    EXPECT_GT(builtin_lexicon(name).size(), 0u) << name;
  }
  EXPECT_THROW(builtin_lexicon_text("nope"), InputError);
  const auto pv = builtin_lexicon(lexicon_names::kPrivateVerbs);
  for (const char* w : {"accept", "anticipate", "fear", "feel", "think", "understand"}) {
    EXPECT_TRUE(pv.entries().count(normalize(w))) << w;
  }
}

TEST(MarkersTest, PrivateVerbRate) {
  const auto doc = analyze_text("d", "I think you think.");
  const auto v = measure_markers(doc, lexicons_with_private({"think"}));
  EXPECT_DOUBLE_EQ(v.private_verb_rate, 500.0);
  EXPECT_DOUBLE_EQ(v.personal_pronoun_rate, 500.0);
}

TEST(MarkersTest, NoHitsGivesZeroRates) {
  const auto v = measure_markers(analyze_text("d", "Green grass grows."), MarkerLexicons::builtin());
  EXPECT_EQ(v.personal_pronoun_rate, 0.0);
  EXPECT_EQ(v.demonstrative_rate, 0.0);
  EXPECT_EQ(v.private_verb_rate, 0.0);
  EXPECT_EQ(v.opinion_argument_rate, 0.0);
}

TEST(MarkersTest, CharsPerWord) {
  const auto v = measure_markers(analyze_text("d", "aa bbbb"), MarkerLexicons::builtin());
  EXPECT_DOUBLE_EQ(v.chars_per_word, 3.0);
}

TEST(MarkersTest, OpinionAndArgumentCountedOnce) {
  auto lex = MarkerLexicons::builtin();
  lex.opinion = MarkerLexicon("opinion", {"if"});
  lex.argument = MarkerLexicon("argument", {"if", "then"});
  const auto v = measure_markers(analyze_text("d", "if then go now"), lex);
  EXPECT_DOUBLE_EQ(v.opinion_argument_rate, 500.0);
}

TEST(MarkersTest, NoWordTokensIsAnError) {
  EXPECT_THROW(measure_markers(analyze_text("d", "... !"), MarkerLexicons::builtin()),
               AnalysisError);
}

TEST(MarkersTest, BoundsAndDuplicationInvariance) {
  std::mt19937 rng(3);
  const std::vector<std::string> words{"I",    "you",  "this", "that", "think", "feel",
                                       "clearly", "if", "river", "ran",  "because", "it",
                                       "excellent", "stone"};
  const auto lex = MarkerLexicons::builtin();
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      text += words[rng() % words.size()];
      text += (rng() % 6 == 0) ? ". " : " ";
    }
    const auto v = measure_markers(analyze_text("d", text), lex);
    const auto doubled = measure_markers(analyze_text("d", text + " " + text), lex);
    const auto a = v.values(), b = doubled.values();
    for (std::size_t m = 0; m < a.size(); ++m) {
      if (m + 1 < a.size()) {
        EXPECT_GE(a[m], 0.0);
        EXPECT_LE(a[m], 1000.0);
      } else {
        EXPECT_GE(a[m], 1.0);
      }
      EXPECT_NEAR(a[m], b[m], 1e-9) << text;
    }
  }
  const auto all = measure_markers(analyze_text("d", "I you we."), lex);
  EXPECT_DOUBLE_EQ(all.personal_pronoun_rate, 1000.0);
}

TEST(ClauseTest, Examples) {
  const auto markers = builtin_lexicon(lexicon_names::kClauseMarkers);
  EXPECT_FALSE(multi_clause_bit(make_sentence("We left."), markers));
  EXPECT_TRUE(multi_clause_bit(make_sentence("We left because it rained."), markers));
  EXPECT_EQ(estimate_clauses(make_sentence("We left; it rained, because..."), markers), 3u);
  EXPECT_TRUE(multi_clause_bit(make_sentence("We left; it rained, because..."), markers));
  EXPECT_FALSE(multi_clause_bit(make_sentence("We left because it rained."), markers, 3));
}

TEST(ClauseTest, AddingAMarkerNeverClearsTheBit) {
  const auto markers = builtin_lexicon(lexicon_names::kClauseMarkers);
  std::mt19937 rng(5);
  const std::vector<std::string> words{"we", "left", "and", "it", "rained", "because",
                                       "the", "dog", ";", "which", "barked"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    for (int i = 0, n = 1 + int(rng() % 12); i < n; ++i) text += words[rng() % words.size()] + " ";
    for (std::size_t threshold : {2u, 3u}) {
      const bool before = multi_clause_bit(make_sentence(text), markers, threshold);
      const bool after = multi_clause_bit(make_sentence(text + " because"), markers, threshold);
      EXPECT_TRUE(!before || after) << text;
    }
  }
}

TEST(TrackTest, OneBitPerSentence) {
  const auto feature = make_multi_clause_feature(builtin_lexicon(lexicon_names::kClauseMarkers));
  const auto doc = analyze_text("d", "We left because it rained. We stayed. It was late and dark.");
  EXPECT_EQ(sentence_feature_track(doc, feature).bits, (std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_TRUE(sentence_feature_track(analyze_text("e", ""), feature).bits.empty());
}

TEST(TrackTest, ConcatenationComposes) {
  const auto feature = make_multi_clause_feature(builtin_lexicon(lexicon_names::kClauseMarkers));
  const std::string a = "We left because it rained. We stayed.";
  const std::string b = "The end came. Then it was late and dark.";
  auto ta = sentence_feature_track(analyze_text("a", a), feature).bits;
  const auto tb = sentence_feature_track(analyze_text("b", b), feature).bits;
  const auto tab = sentence_feature_track(analyze_text("ab", a + " " + b), feature).bits;
  ta.insert(ta.end(), tb.begin(), tb.end());
  EXPECT_EQ(tab, ta);
}

TEST(TrackTest, CorpusTracksParallelMatchesSerial) {
  std::vector<Document> docs;
  for (int i = 0; i < 40; ++i) {
    std::string text;
    for (int s = 0; s < i % 7 + 1; ++s) {
      text += (s + i) % 3 ? "The sun rose. " : "The sun rose and the wind fell. ";
    }
    docs.push_back({"d" + std::to_string(i), text, {}, {}});
  }
  const Corpus corpus(docs, {});
  const auto feature = make_multi_clause_feature(builtin_lexicon(lexicon_names::kClauseMarkers));
  const auto serial = corpus_tracks(corpus, feature);
  const auto parallel = corpus_tracks(corpus, feature, Abbreviations::builtin(), 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].doc_id, corpus[i].id);
    EXPECT_EQ(serial[i].bits, parallel[i].bits);
  }
}

Corpus two_category_corpus() {
  std::vector<Document> docs;
  for (int i = 0; i < 10; ++i) {
    docs.push_back({"a" + std::to_string(i), "The zebra ran home. Common words here.", "A", {}});
    docs.push_back({"b" + std::to_string(i), "The lion ran home. Common words here.", "B", {}});
  }
  return Corpus(docs, {});
}

TEST(TypicalWordsTest, PlantedKeywordRanksFirst) {
  const auto corpus = two_category_corpus();
  const DocumentFrequencies df(corpus);
  const auto rows = typical_words(corpus, df, LabelKind::kGenre, "A", 1, 5);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0].word, "zebra");
  EXPECT_EQ(rows[0].df_in, 10u);
  EXPECT_EQ(rows[0].df_out, 0u);
  EXPECT_EQ(rows[0].direction, Direction::kOver);
  // Contingency (10, 0, 0, 10) computed directly.
  EXPECT_DOUBLE_EQ(rows[0].chi_squared, oracle::chi_squared_expected(10, 0, 0, 10));
  EXPECT_EQ(rows.size(), 1u);  // shared words score zero and are excluded
}

TEST(TypicalWordsTest, UniversalWordScoresZero) {
  const auto corpus = two_category_corpus();
  const DocumentFrequencies df(corpus);
  for (const auto& row : word_associations(corpus, df, LabelKind::kGenre, "A", 1)) {
    if (row.word == "common" || row.word == "the") {
      EXPECT_EQ(row.chi_squared, 0.0);
      EXPECT_EQ(row.direction, Direction::kUnder);
    }
  }
}

TEST(TypicalWordsTest, OverInCategoryIsUnderInComplement) {
  std::mt19937 rng(9);
  const std::vector<std::string> vocab{"alpha", "beta", "gamma", "delta", "omega", "rho", "tau"};
  std::vector<Document> docs;
  for (int i = 0; i < 60; ++i) {
    std::string text;
    for (int w = 0; w < 6; ++w) text += vocab[rng() % (i % 2 ? vocab.size() : 4)] + " ";
    docs.push_back({"d" + std::to_string(i), text, i % 2 ? "X" : "Y", {}});
  }
  docs.push_back({"untagged", "alpha omega", {}, {}});
  const Corpus corpus(docs, {});
  const DocumentFrequencies df(corpus);
  const auto x = word_associations(corpus, df, LabelKind::kGenre, "X", 1);
  const auto y = word_associations(corpus, df, LabelKind::kGenre, "Y", 1);
  ASSERT_EQ(x.size(), y.size());
  std::map<std::string, TypicalWordRow> by_word;
  for (const auto& row : y) by_word[row.word] = row;
  for (const auto& row : x) {
    const auto& other = by_word.at(row.word);
    EXPECT_EQ(row.chi_squared, other.chi_squared) << row.word;
    if (row.direction == Direction::kOver) EXPECT_EQ(other.direction, Direction::kUnder);
    EXPECT_EQ(row.df_in, other.df_out);
  }
}

TEST(TypicalWordsTest, DeterministicTotalOrder) {
  const auto corpus = two_category_corpus();
  const DocumentFrequencies df1(corpus), df2(corpus, Abbreviations::builtin(), 3);
  const auto a = word_associations(corpus, df1, LabelKind::kGenre, "B", 1);
  const auto b = word_associations(corpus, df2, LabelKind::kGenre, "B", 1);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].word, b[i].word);
  for (std::size_t i = 1; i < a.size(); ++i) {
    EXPECT_TRUE(a[i - 1].chi_squared > a[i].chi_squared ||
                (a[i - 1].chi_squared == a[i].chi_squared && a[i - 1].word < a[i].word));
  }
}

TEST(TypicalWordsTest, Errors) {
  const auto corpus = two_category_corpus();
  const DocumentFrequencies df(corpus);
  EXPECT_THROW(typical_words(corpus, df, LabelKind::kGenre, "C", 1, 5), AnalysisError);
  const Corpus single({{"a", "x y", "A", {}}, {"b", "x z", {}, {}}}, {});
  const DocumentFrequencies df_single(single);
  EXPECT_THROW(typical_words(single, df_single, LabelKind::kGenre, "A", 1, 5), AnalysisError);
  EXPECT_TRUE(typical_words(corpus, df, LabelKind::kGenre, "A", 1000, 5).empty());
}

}  // namespace
}  // namespace stylo
