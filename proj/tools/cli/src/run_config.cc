#include "stylo/cli/run_config.h"

#include <charconv>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "stylo/configurational.h"
#include "stylo/corpus.h"
#include "stylo/error.h"
#include "stylo/lexicon.h"

namespace stylo::cli {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(kSpace) - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw InputError(fmt::format("invalid value '{}' for '{}'", value, key));
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value) {
  Int out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) bad_value(key, value);
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) bad_value(key, value);
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad_value(key, value);
}

bool is_builtin_lexicon(std::string_view name) {
  for (const auto builtin : builtin_lexicon_names()) {
    if (builtin == name) return true;
  }
  return false;
}

}  // namespace

std::vector<int> parse_window_list(std::string_view text) {
  std::vector<int> windows;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) windows.push_back(parse_int<int>("windows", item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return windows;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "corpus") c.corpus = value;
  else if (key == "format") c.format = value;
  else if (key == "allow_empty") c.allow_empty = parse_bool(key, value);
  else if (key == "partition") c.partition = value;
  else if (key == "abbreviations") c.abbreviations = value;
  else if (key == "windows") c.windows = parse_window_list(value);
  else if (key == "epsilon") c.epsilon = parse_double(key, value);
  else if (key == "alpha") c.alpha = parse_double(key, value);
  else if (key == "exact_max_product") c.exact_max_product = parse_int<std::size_t>(key, value);
  else if (key == "sample_size") c.sample_size = parse_int<std::size_t>(key, value);
  else if (key == "rounds") c.rounds = parse_int<std::size_t>(key, value);
  else if (key == "seed") c.seed = parse_int<std::uint64_t>(key, value);
  else if (key == "min_df") c.min_df = parse_int<std::size_t>(key, value);
  else if (key == "top_k") c.top_k = parse_int<std::size_t>(key, value);
  else if (key == "clause_threshold") c.clause_threshold = parse_int<std::size_t>(key, value);
  else if (key == "min_author_windows") c.min_author_windows = parse_int<std::size_t>(key, value);
  else if (key == "min_category_docs") c.min_category_docs = parse_int<std::size_t>(key, value);
  else if (key == "output") c.output = value;
  else if (key == "threads") c.threads = parse_int<unsigned>(key, value);
  else if (key.rfind("lexicon.", 0) == 0) {
    const auto name = key.substr(8);
    if (!is_builtin_lexicon(name)) {
      throw InputError(fmt::format("unknown lexicon '{}'", name));
    }
    if (value.empty()) {
      c.lexicons.erase(std::string(name));
    } else {
      c.lexicons[std::string(name)] = value;
    }
  } else {
    throw InputError(fmt::format("unknown config key '{}'", key));
  }
}

void apply_config_text(RunConfig& config, std::string_view text, std::string_view source) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const auto line = trim(text.substr(0, eol));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError(fmt::format("{} line {}: expected key=value", source, line_no));
    }
    try {
      apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
    } catch (const InputError& e) {
      throw InputError(fmt::format("{} line {}: {}", source, line_no, e.what()));
    }
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::FILE* file = std::fopen(path.c_str(), "rb");
  if (!file) throw InputError("cannot open config file " + path);
  std::string text;
  char buffer[4096];
  for (std::size_t n; (n = std::fread(buffer, 1, sizeof buffer, file)) > 0;) {
    text.append(buffer, n);
  }
  std::fclose(file);
  apply_config_text(config, text, path);
}

void RunConfig::validate() const {
  parse_corpus_format(format);
  if (partition != "both") parse_label_kind(partition);
  if (windows.empty()) throw InputError("windows: at least one window size is required");
  for (const int w : windows) {
    if (w < kMinWindow || w > kMaxWindow) {
      throw InputError(fmt::format("windows: {} outside [{}, {}]", w, kMinWindow, kMaxWindow));
    }
  }
  if (!(epsilon >= 0.0)) throw InputError("epsilon must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  if (sample_size < 2) throw InputError("sample_size must be >= 2");
  if (rounds < 1) throw InputError("rounds must be >= 1");
  if (min_df < 1) throw InputError("min_df must be >= 1");
  if (top_k < 1) throw InputError("top_k must be >= 1");
  if (clause_threshold < 1) throw InputError("clause_threshold must be >= 1");
  if (min_category_docs < 1) throw InputError("min_category_docs must be >= 1");
  if (threads < 1) throw InputError("threads must be >= 1");
}

std::string RunConfig::serialize() const {
  std::string out = "# stylo run configuration\n";
  auto line = [&](std::string_view key, const auto& value) {
    out += fmt::format("{}={}\n", key, value);
  };
  line("corpus", corpus);
  line("format", format);
  line("allow_empty", allow_empty ? "true" : "false");
  line("partition", partition);
  line("abbreviations", abbreviations);
  for (const auto name : builtin_lexicon_names()) {
    const auto it = lexicons.find(std::string(name));
    line(fmt::format("lexicon.{}", name), it == lexicons.end() ? "" : it->second);
  }
  line("windows", fmt::format("{}", fmt::join(windows, ",")));
  line("epsilon", epsilon);
  line("alpha", alpha);
  line("exact_max_product", exact_max_product);
  line("sample_size", sample_size);
  line("rounds", rounds);
  line("seed", seed);
  line("min_df", min_df);
  line("top_k", top_k);
  line("clause_threshold", clause_threshold);
  line("min_author_windows", min_author_windows);
  line("min_category_docs", min_category_docs);
  return out;
}

}  // namespace stylo::cli
