#include "stylo/corpus.h"

#include <algorithm>
#include "json.hpp"
#include <unordered_map>
#include <unordered_set>

#include "io.h"
#include "stylo/error.h"

namespace stylo {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void clean_label(std::optional<std::string>& label) {
  if (!label) return;
  const auto trimmed = detail::trim(*label);
  if (trimmed.empty()) {
    label.reset();
  } else {
    label = std::string(trimmed);
  }
}

bool blank(std::string_view s) { return detail::trim(s).empty(); }

std::optional<std::string> optional_string(const json& record,
                                           const char* field,
                                           std::size_t line) {
  const auto it = record.find(field);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw InputError("line " + std::to_string(line) + ": field \"" + field +
                     "\" must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  for (;;) {
    const auto tab = line.find('\t');
    fields.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

void apply_metadata(const fs::path& sidecar, std::vector<Document>& documents) {
  const auto contents = detail::read_file(sidecar);
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < documents.size(); ++i) by_id[documents[i].id] = i;

  std::optional<std::size_t> path_col, genre_col, author_col;
  std::unordered_set<std::string> seen;
  std::string_view rest = contents;
  bool header = true;
  for (std::size_t line_no = 1; !rest.empty(); ++line_no) {
    const auto eol = rest.find('\n');
    auto line = rest.substr(0, eol);
    rest.remove_prefix(eol == std::string_view::npos ? rest.size() : eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (blank(line)) continue;
    const auto fields = split_tabs(line);
    const auto where = sidecar.string() + " line " + std::to_string(line_no);
    if (header) {
      for (std::size_t c = 0; c < fields.size(); ++c) {
        const auto name = detail::trim(fields[c]);
        if (name == "path") path_col = c;
        if (name == "genre") genre_col = c;
        if (name == "author") author_col = c;
      }
      if (!path_col) throw InputError(where + ": header has no 'path' column");
      header = false;
      continue;
    }
    auto field = [&](std::optional<std::size_t> col) -> std::optional<std::string> {
      if (!col || *col >= fields.size()) return std::nullopt;
      return std::string(fields[*col]);
    };
    const auto path = field(path_col);
    const std::string id = path ? std::string(detail::trim(*path)) : std::string();
    if (id.empty()) throw InputError(where + ": empty path");
    const auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw InputError(where + ": no document '" + id + "'");
    }
    if (!seen.insert(id).second) {
      throw InputError(where + ": duplicate entry for '" + id + "'");
    }
    auto& doc = documents[it->second];
    doc.genre = field(genre_col);
    doc.author = field(author_col);
  }
  if (header) throw InputError(sidecar.string() + ": missing header row");
}

Corpus ingest_directory(const fs::path& root, const IngestPolicy& policy) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw InputError("not a directory: " + root.string());
  }
  std::vector<fs::path> files;
  for (fs::recursive_directory_iterator it(root, ec), end; it != end;
       it.increment(ec)) {
    if (ec) break;
    if (it->is_regular_file() && it->path().extension() == ".txt") {
      files.push_back(it->path());
    }
  }
  if (ec) throw InputError("cannot list " + root.string() + ": " + ec.message());
  if (files.empty()) throw InputError("no documents in " + root.string());

  std::vector<Document> documents;
  documents.reserve(files.size());
  for (const auto& file : files) {
    Document doc;
    doc.id = file.lexically_relative(root).generic_string();
    doc.text = detail::read_file(file);
    if (!policy.allow_empty_text && blank(doc.text)) {
      throw InputError("document '" + doc.id + "' has empty text");
    }
    documents.push_back(std::move(doc));
  }
  std::sort(documents.begin(), documents.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });

  const auto sidecar = root / "metadata.tsv";
  if (fs::exists(sidecar, ec)) apply_metadata(sidecar, documents);
  return Corpus(std::move(documents), {root.string(), CorpusFormat::kDirectory});
}

}  // namespace

std::string_view to_string(LabelKind kind) {
  return kind == LabelKind::kGenre ? "genre" : "author";
}

LabelKind parse_label_kind(std::string_view name) {
  if (name == "genre") return LabelKind::kGenre;
  if (name == "author") return LabelKind::kAuthor;
  throw InputError("unknown partition '" + std::string(name) +
                   "' (expected genre or author)");
}

std::string_view to_string(CorpusFormat format) {
  return format == CorpusFormat::kJsonl ? "jsonl" : "directory";
}

CorpusFormat parse_corpus_format(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "directory" || name == "dir") return CorpusFormat::kDirectory;
  throw InputError("unknown corpus format '" + std::string(name) +
                   "' (expected jsonl or directory)");
}

Corpus::Corpus(std::vector<Document> documents, Provenance provenance)
    : documents_(std::move(documents)), provenance_(std::move(provenance)) {
  std::unordered_set<std::string_view> ids;
  ids.reserve(documents_.size());
  for (auto& doc : documents_) {
    if (doc.id.empty()) throw InputError("document with empty id");
    if (!ids.insert(doc.id).second) {
      throw InputError("duplicate document id '" + doc.id + "'");
    }
    clean_label(doc.genre);
    clean_label(doc.author);
  }
}

Partition Corpus::partition(LabelKind kind) const {
  Partition out;
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    if (const auto& label = documents_[i].label(kind)) {
      out[*label].push_back(i);
    }
  }
  return out;
}

std::size_t Corpus::labeled_count(LabelKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(documents_.begin(), documents_.end(),
                    [kind](const Document& d) { return d.label(kind).has_value(); }));
}

Corpus parse_jsonl_corpus(std::string_view contents, std::string source,
                          const IngestPolicy& policy) {
  std::vector<Document> documents;
  std::unordered_map<std::string, std::size_t> first_line;
  std::size_t line_no = 0;
  while (!contents.empty()) {
    ++line_no;
    const auto eol = contents.find('\n');
    const auto line = contents.substr(0, eol);
    contents.remove_prefix(eol == std::string_view::npos ? contents.size()
                                                         : eol + 1);
    if (blank(line)) continue;
    const auto where = "line " + std::to_string(line_no);
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError(where + ": malformed JSON: " + e.what());
    }
    if (!record.is_object()) throw InputError(where + ": record is not an object");
    Document doc;
    auto id = optional_string(record, "id", line_no);
    auto text = optional_string(record, "text", line_no);
    if (!id) throw InputError(where + ": missing \"id\"");
    if (!text) throw InputError(where + ": missing \"text\"");
    if (id->empty()) throw InputError(where + ": empty \"id\"");
    doc.id = std::move(*id);
    doc.text = std::move(*text);
    doc.genre = optional_string(record, "genre", line_no);
    doc.author = optional_string(record, "author", line_no);
    if (!policy.allow_empty_text && blank(doc.text)) {
      throw InputError(where + ": document '" + doc.id + "' has empty text");
    }
    if (const auto [it, fresh] = first_line.emplace(doc.id, line_no); !fresh) {
      throw InputError(where + ": duplicate document id '" + doc.id +
                       "' (first seen on line " + std::to_string(it->second) + ")");
    }
    documents.push_back(std::move(doc));
  }
  if (documents.empty()) throw InputError("no documents in " + source);
  return Corpus(std::move(documents), {std::move(source), CorpusFormat::kJsonl});
}

Corpus ingest_corpus(const std::filesystem::path& path, CorpusFormat format,
                     const IngestPolicy& policy) {
  std::error_code ec;
  if (!fs::exists(path, ec)) throw InputError("no such path: " + path.string());
  if (format == CorpusFormat::kDirectory) return ingest_directory(path, policy);
  const auto contents = detail::read_file(path);
  try {
    return parse_jsonl_corpus(contents, path.string(), policy);
  } catch (const InputError& e) {
    const std::string message = e.what();
    if (message.rfind("no documents", 0) == 0) throw;
    throw InputError(path.string() + ": " + message);
  }
}

}  // namespace stylo
