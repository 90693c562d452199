#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stylo/features.h"
#include "stylo/stats.h"

namespace stylo {

inline constexpr int kMinWindow = 1;
inline constexpr int kMaxWindow = 5;

// Patterns are indexed by their bits read left to right, earliest sentence
// as the most significant bit: "10" (1 then 0) is index 2.
std::string pattern_string(std::size_t pattern, int window);
std::size_t pattern_space(int window);  // 2^window

// Counts of every n-bit transition pattern over a set of tracks.
struct PatternCounts {
  int window = 1;
  std::vector<std::uint64_t> counts;  // size pattern_space(window)

  explicit PatternCounts(int window);
  std::uint64_t total() const;
  PatternCounts& operator+=(const PatternCounts& other);
};

// Counts every window lying fully inside the track; a track shorter than
// the window contributes nothing. Throws InputError unless 1 <= window <= 5.
PatternCounts transition_patterns(std::span<const std::uint8_t> bits,
                                  int window);
PatternCounts transition_patterns(const SentenceFeatureTrack& track,
                                  int window);

struct PatternDistribution {
  std::string category;
  int window = 1;
  double epsilon = 0.0;
  std::vector<std::uint64_t> counts;
  std::vector<double> probs;

  std::uint64_t total() const;
};

// probs[p] = (count[p] + epsilon) / (total + epsilon * 2^n). Throws
// AnalysisError when that denominator is zero, InputError on epsilon < 0.
PatternDistribution make_distribution(const PatternCounts& counts,
                                      double epsilon, std::string category);

// Sums the pattern counts of the selected tracks; windows never span two
// tracks.
PatternDistribution category_distribution(
    std::span<const SentenceFeatureTrack> tracks,
    std::span<const std::size_t> members, int window, double epsilon,
    std::string category);

// One distribution per label of the partition, in label order.
// tracks[i] must belong to corpus document i.
std::vector<PatternDistribution> partition_distributions(
    const Corpus& corpus, std::span<const SentenceFeatureTrack> tracks,
    LabelKind kind, int window, double epsilon);

double kl_divergence(const PatternDistribution& p,
                     const PatternDistribution& q);
double symmetrized_kl(const PatternDistribution& p,
                      const PatternDistribution& q);

}  // namespace stylo
