#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/text.h"

namespace stylo {

enum class LabelKind { kGenre, kAuthor };

std::string_view to_string(LabelKind kind);
// Accepts "genre" or "author"; throws InputError otherwise.
LabelKind parse_label_kind(std::string_view name);

struct Document {
  std::string id;
  std::string text;
  std::optional<std::string> genre;
  std::optional<std::string> author;

  const std::optional<std::string>& label(LabelKind kind) const {
    return kind == LabelKind::kGenre ? genre : author;
  }
};

enum class CorpusFormat { kJsonl, kDirectory };

std::string_view to_string(CorpusFormat format);
CorpusFormat parse_corpus_format(std::string_view name);

struct Provenance {
  std::string source;
  CorpusFormat format = CorpusFormat::kJsonl;
};

// Category label -> indices of the documents carrying it, in corpus order.
// Labels iterate in lexicographic order.
using Partition = std::map<std::string, std::vector<std::size_t>, std::less<>>;

// An ordered, read-only document collection with unique ids.
class Corpus {
 public:
  Corpus() = default;
  // Validates ids (non-empty, unique) and trims labels; a label that is
  // empty after trimming is dropped, leaving the document unlabeled.
  Corpus(std::vector<Document> documents, Provenance provenance);

  const std::vector<Document>& documents() const { return documents_; }
  const Document& operator[](std::size_t i) const { return documents_[i]; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }
  const Provenance& provenance() const { return provenance_; }

  Partition partition(LabelKind kind) const;
  std::size_t labeled_count(LabelKind kind) const;

 private:
  std::vector<Document> documents_;
  Provenance provenance_;
};

struct IngestPolicy {
  // Documents with empty (or all-whitespace) text are rejected unless set.
  bool allow_empty_text = false;
};

// JSONL: one object per line with string fields "id", "text" and optional
// "genre", "author". Blank lines are skipped.
// Directory: every *.txt file below path, id = path relative to the root
// with '/' separators, in sorted order. An optional metadata.tsv with a
// header row naming a "path" column and optional "genre" and "author"
// columns assigns labels.
Corpus ingest_corpus(const std::filesystem::path& path, CorpusFormat format,
                     const IngestPolicy& policy = {});

Corpus parse_jsonl_corpus(std::string_view contents, std::string source,
                          const IngestPolicy& policy = {});

}  // namespace stylo
