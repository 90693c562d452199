#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "stylo/cli/run_config.h"
#include "stylo/corpus.h"
#include "stylo/discriminability.h"
#include "stylo/features.h"
#include "stylo/lexicon.h"
#include "stylo/text.h"

namespace stylo::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitAnalysis = 3;

// Corpus, lexicons and abbreviations resolved from a config.
struct Resources {
  Corpus corpus;
  Abbreviations abbreviations;
  MarkerLexicons markers;
  MarkerLexicon clause_markers;
};

Resources load_resources(const RunConfig& config);
SentenceFeature clause_feature(const RunConfig& config, const Resources& resources);

// Labels are mapped to file-name-safe stems; distinct labels that collide
// after mapping get a numeric suffix.
std::vector<std::string> file_stems(const std::vector<std::string>& labels);

// Prints tagged/untagged totals and per-label counts for both partitions.
void cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& log);

// Writes typical_<partition>_<label>.tsv for every category. Returns the
// files written.
std::vector<std::filesystem::path> cmd_typical(const RunConfig& config, std::ostream& out,
                                               std::ostream& log);

// Writes markers_<partition>.tsv (+ / - / . per category and marker) and
// markers_<partition>_values.tsv (means, U, p).
std::vector<std::filesystem::path> cmd_markers(const RunConfig& config, std::ostream& out,
                                               std::ostream& log);

// Writes distributions_<partition>.tsv for every requested window.
std::vector<std::filesystem::path> cmd_distributions(const RunConfig& config,
                                                     std::ostream& out, std::ostream& log);

// Writes sweep.tsv and sweep.json. Returns the report.
DivergenceReport cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& log);

// Writes every built-in lexicon and the abbreviation list as text files.
std::vector<std::filesystem::path> cmd_dump_lexicons(const RunConfig& config,
                                                     std::ostream& out);

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stylo::cli
