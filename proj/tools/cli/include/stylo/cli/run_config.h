#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stylo::cli {

// Environment variable naming a config file used when --config is absent.
inline constexpr const char* kConfigEnvVar = "STYLO_CONFIG";
// Name of the resolved config written next to every output.
inline constexpr const char* kConfigFileName = "run.conf";

// Every knob of a run. Config files hold the same fields as key=value
// lines; lexicon overrides use keys of the form lexicon.<name>.
struct RunConfig {
  std::string corpus;
  std::string format = "jsonl";
  bool allow_empty = false;
  std::string partition = "genre";  // genre | author | both
  std::map<std::string, std::string> lexicons;
  std::string abbreviations;
  std::vector<int> windows{1, 2, 3, 4, 5};
  double epsilon = 0.5;
  double alpha = 0.05;
  std::size_t exact_max_product = 400;
  std::size_t sample_size = 8;
  std::size_t rounds = 50;
  std::uint64_t seed = 1;
  std::size_t min_df = 3;
  std::size_t top_k = 10;
  std::size_t clause_threshold = 2;
  std::size_t min_author_windows = 30;
  std::size_t min_category_docs = 2;

  // Execution settings; they never change results and are not serialized.
  std::string output = "stylo-out";
  unsigned threads = 1;

  // Throws InputError naming the first field out of range.
  void validate() const;
  // Deterministic key=value text, one field per line, fixed order.
  std::string serialize() const;
};

// Applies key=value lines onto config; '#' comments and blank lines are
// ignored. Unknown keys and unparsable values throw InputError.
void apply_config_text(RunConfig& config, std::string_view text,
                       std::string_view source = "config");
void apply_config_file(RunConfig& config, const std::string& path);
// Applies a single key=value assignment.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

std::vector<int> parse_window_list(std::string_view text);

}  // namespace stylo::cli
