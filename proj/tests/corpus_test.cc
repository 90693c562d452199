#include "stylo/corpus.h"

#include <gtest/gtest.h>

#include <set>

#include "stylo/error.h"
#include "support/temp_dir.h"

namespace stylo {
namespace {

using testing::TempDir;

TEST(JsonlTest, SingleRecord) {
  const auto corpus = parse_jsonl_corpus(R"({"id":"a","text":"Hello.","genre":"leader"})", "t");
  ASSERT_EQ(corpus.size(), 1u);
  EXPECT_EQ(corpus[0].id, "a");
  EXPECT_EQ(corpus[0].genre, "leader");
  EXPECT_FALSE(corpus[0].author);
}

TEST(JsonlTest, DuplicateIdNamesTheId) {
  try {
    parse_jsonl_corpus("{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"a\",\"text\":\"y\"}\n", "t");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(JsonlTest, MalformedRecordReportsLine) {
  const std::string input = "{\"id\":\"a\",\"text\":\"x\"}\n\n{\"id\": oops}\n";
  try {
    parse_jsonl_corpus(input, "t");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(JsonlTest, RequiredFields) {
  EXPECT_THROW(parse_jsonl_corpus(R"({"text":"x"})", "t"), InputError);
  EXPECT_THROW(parse_jsonl_corpus(R"({"id":"a"})", "t"), InputError);
  EXPECT_THROW(parse_jsonl_corpus(R"({"id":7,"text":"x"})", "t"), InputError);
  EXPECT_THROW(parse_jsonl_corpus(R"({"id":"a","text":"x","genre":3})", "t"), InputError);
  EXPECT_THROW(parse_jsonl_corpus("[1,2]", "t"), InputError);
  EXPECT_THROW(parse_jsonl_corpus("", "t"), InputError);
}

TEST(JsonlTest, EmptyTextPolicy) {
  const std::string input = R"({"id":"a","text":"  "})";
  EXPECT_THROW(parse_jsonl_corpus(input, "t"), InputError);
  IngestPolicy lenient;
  lenient.allow_empty_text = true;
  EXPECT_EQ(parse_jsonl_corpus(input, "t", lenient).size(), 1u);
}

TEST(JsonlTest, BlankLabelsBecomeUnlabeled) {
  const auto corpus = parse_jsonl_corpus(
      "{\"id\":\"a\",\"text\":\"x\",\"genre\":\"  \",\"author\":\" Ann \"}\n", "t");
  EXPECT_FALSE(corpus[0].genre);
  EXPECT_EQ(corpus[0].author, "Ann");
}

TEST(IngestTest, MissingPath) {
  EXPECT_THROW(ingest_corpus("/nonexistent/stylo.jsonl", CorpusFormat::kJsonl), InputError);
  EXPECT_THROW(ingest_corpus("/nonexistent/dir", CorpusFormat::kDirectory), InputError);
}

TEST(IngestTest, DirectoryWithSidecar) {
  TempDir dir;
  dir.write("a.txt", "First text.");
  dir.write("b.txt", "Second text.");
  dir.write("sub/c.txt", "Third text.");
  dir.write("notes.md", "ignored");
  dir.write("metadata.tsv", "path\tgenre\tauthor\na.txt\tleader\tann\nsub/c.txt\t\tbob\n");
  const auto corpus = ingest_corpus(dir.path(), CorpusFormat::kDirectory);
  ASSERT_EQ(corpus.size(), 3u);
  EXPECT_EQ(corpus[0].id, "a.txt");
  EXPECT_EQ(corpus[1].id, "b.txt");
  EXPECT_EQ(corpus[2].id, "sub/c.txt");
  EXPECT_EQ(corpus[2].text, "Third text.");
  EXPECT_EQ(corpus.partition(LabelKind::kAuthor).size(), 2u);
  EXPECT_EQ(corpus.labeled_count(LabelKind::kAuthor), 2u);
  EXPECT_EQ(corpus.labeled_count(LabelKind::kGenre), 1u);
  EXPECT_EQ(corpus.provenance().format, CorpusFormat::kDirectory);
}

TEST(IngestTest, SidecarErrors) {
  TempDir dir;
  dir.write("a.txt", "Text.");
  dir.write("metadata.tsv", "genre\tauthor\nx\ty\n");
  EXPECT_THROW(ingest_corpus(dir.path(), CorpusFormat::kDirectory), InputError);
  dir.write("metadata.tsv", "path\tgenre\nmissing.txt\tx\n");
  EXPECT_THROW(ingest_corpus(dir.path(), CorpusFormat::kDirectory), InputError);
  dir.write("metadata.tsv", "path\tgenre\na.txt\tx\na.txt\ty\n");
  EXPECT_THROW(ingest_corpus(dir.path(), CorpusFormat::kDirectory), InputError);
}

TEST(IngestTest, EmptyDirectory) {
  TempDir dir;
  try {
    ingest_corpus(dir.path(), CorpusFormat::kDirectory);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("no documents"), std::string::npos);
  }
}

TEST(IngestTest, JsonlFileRoundTrip) {
  TempDir dir;
  const auto path = dir.write("c.jsonl",
                              "{\"id\":\"a\",\"text\":\"x\",\"genre\":\"g\"}\n"
                              "{\"id\":\"b\",\"text\":\"y\",\"author\":\"z\"}\n");
  const auto corpus = ingest_corpus(path, CorpusFormat::kJsonl);
  EXPECT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus.provenance().source, path.string());
}

TEST(CorpusTest, RejectsBadIds) {
  EXPECT_THROW(Corpus({{"", "t", {}, {}}}, {}), InputError);
  EXPECT_THROW(Corpus({{"a", "t", {}, {}}, {"a", "u", {}, {}}}, {}), InputError);
}

TEST(CorpusTest, PartitionIsDisjointCoverOfLabeledDocuments) {
  std::vector<Document> docs;
  for (int i = 0; i < 60; ++i) {
    Document d{"d" + std::to_string(i), "text", {}, {}};
    if (i % 3) d.genre = "g" + std::to_string(i % 5);
    if (i % 4) d.author = "a" + std::to_string(i % 7);
    docs.push_back(d);
  }
  const Corpus corpus(docs, {});
  for (const auto kind : {LabelKind::kGenre, LabelKind::kAuthor}) {
    std::set<std::size_t> seen;
    std::size_t total = 0;
    for (const auto& [label, members] : corpus.partition(kind)) {
      for (const auto i : members) {
        EXPECT_EQ(corpus[i].label(kind), label);
        seen.insert(i);
        ++total;
      }
    }
    EXPECT_EQ(total, seen.size());
    EXPECT_EQ(total, corpus.labeled_count(kind));
  }
}

TEST(CorpusTest, LabelKindAndFormatNames) {
  EXPECT_EQ(parse_label_kind("genre"), LabelKind::kGenre);
  EXPECT_EQ(to_string(LabelKind::kAuthor), "author");
  EXPECT_THROW(parse_label_kind("topic"), InputError);
  EXPECT_EQ(parse_corpus_format("directory"), CorpusFormat::kDirectory);
  EXPECT_THROW(parse_corpus_format("xml"), InputError);
}

}  // namespace
}  // namespace stylo
