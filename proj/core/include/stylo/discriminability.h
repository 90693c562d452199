#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stylo/configurational.h"
#include "stylo/corpus.h"
#include "stylo/features.h"
#include "stylo/rng.h"

namespace stylo {

// Sum of symmetrized KL over all unordered pairs. Pair values are summed in
// sorted order, so the result does not depend on the input order. Throws
// AnalysisError for fewer than two distributions or mixed window/epsilon.
double partition_divergence_sum(
    std::span<const PatternDistribution> distributions);

struct ResampleOptions {
  std::size_t sample_size = 8;
  std::size_t rounds = 50;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct ResampleResult {
  double mean = 0.0;
  std::vector<double> round_sums;
  // Indices into the candidate list drawn in each round.
  std::vector<std::vector<std::size_t>> round_members;
};

// Each round draws sample_size candidates without replacement using the
// round's derived seed and sums their pairwise divergences; the result is
// the compensated mean over rounds. Serial and threaded runs agree exactly.
ResampleResult resample_divergence(
    std::span<const PatternDistribution> candidates,
    const ResampleOptions& options);

// Authors contributing at least min_windows windows of the given size,
// in label order.
std::vector<std::string> eligible_authors(
    const Corpus& corpus, std::span<const SentenceFeatureTrack> tracks,
    int reference_window, std::size_t min_windows);

struct AuthorSampling {
  std::size_t min_windows = 30;
  // Window at which eligibility is judged; 0 means the analysed window.
  int reference_window = 0;
};

// Throws AnalysisError when fewer than sample_size authors are eligible.
ResampleResult resampled_author_divergence(
    const Corpus& corpus, std::span<const SentenceFeatureTrack> tracks,
    int window, double epsilon, const ResampleOptions& options,
    const AuthorSampling& sampling = {});

struct SweepOptions {
  std::vector<int> windows{1, 2, 3, 4, 5};
  double epsilon = 0.5;
  std::size_t sample_size = 8;
  std::size_t rounds = 50;
  std::uint64_t seed = 0;
  std::size_t min_author_windows = 30;
  unsigned threads = 1;
};

struct DivergenceRow {
  int window = 1;
  LabelKind partition = LabelKind::kGenre;
  double divergence_sum = 0.0;
  std::size_t rounds = 1;
  // Categories entering each pairwise sum.
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  std::vector<double> round_sums;
};

struct DivergenceReport {
  std::vector<DivergenceRow> rows;  // by window, genre before author
  double epsilon = 0.0;
  std::string feature_name;
  std::string resampler{kResamplerName};
  std::size_t genre_categories = 0;
  std::size_t eligible_authors = 0;
  // Reasons a partition was skipped.
  std::vector<std::string> notes;

  const DivergenceRow* find(int window, LabelKind partition) const;
  // author - genre divergence at a window, when both rows exist.
  std::optional<double> gap(int window) const;
};

// Genre row from every genre label and a resampled author row per window.
// A partition that cannot be evaluated is skipped with a note; throws
// AnalysisError when neither can.
DivergenceReport window_sweep(const Corpus& corpus,
                              std::span<const SentenceFeatureTrack> tracks,
                              std::string feature_name,
                              const SweepOptions& options);

}  // namespace stylo
