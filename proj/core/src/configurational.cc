#include "stylo/configurational.h"

#include <numeric>

#include "stylo/error.h"

namespace stylo {
namespace {

void check_window(int window) {
  if (window < kMinWindow || window > kMaxWindow) {
    throw InputError("window size " + std::to_string(window) + " outside [" +
                     std::to_string(kMinWindow) + ", " + std::to_string(kMaxWindow) + "]");
  }
}

}  // namespace

std::string pattern_string(std::size_t pattern, int window) {
  std::string out(static_cast<std::size_t>(window), '0');
  for (int i = 0; i < window; ++i) {
    if (pattern & (std::size_t{1} << (window - 1 - i))) out[i] = '1';
  }
  return out;
}

std::size_t pattern_space(int window) {
  check_window(window);
  return std::size_t{1} << window;
}

PatternCounts::PatternCounts(int window)
    : window(window), counts(pattern_space(window), 0) {}

std::uint64_t PatternCounts::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

PatternCounts& PatternCounts::operator+=(const PatternCounts& other) {
  if (other.window != window) {
    throw AnalysisError("cannot merge pattern counts of windows " +
                        std::to_string(window) + " and " + std::to_string(other.window));
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

PatternCounts transition_patterns(std::span<const std::uint8_t> bits, int window) {
  PatternCounts out(window);
  const std::size_t n = static_cast<std::size_t>(window);
  const std::size_t mask = out.counts.size() - 1;
  std::size_t pattern = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    pattern = ((pattern << 1) | (bits[i] ? 1u : 0u)) & mask;
    if (i + 1 >= n) ++out.counts[pattern];
  }
  return out;
}

PatternCounts transition_patterns(const SentenceFeatureTrack& track, int window) {
  return transition_patterns(std::span<const std::uint8_t>(track.bits), window);
}

std::uint64_t PatternDistribution::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

PatternDistribution make_distribution(const PatternCounts& counts, double epsilon,
                                      std::string category) {
  if (!(epsilon >= 0.0)) throw InputError("smoothing epsilon must be >= 0");
  PatternDistribution dist;
  dist.category = std::move(category);
  dist.window = counts.window;
  dist.epsilon = epsilon;
  dist.counts = counts.counts;
  const double cells = static_cast<double>(counts.counts.size());
  const double denominator = static_cast<double>(counts.total()) + epsilon * cells;
  if (denominator == 0.0) {
    throw AnalysisError("category '" + dist.category + "' has no windows of size " +
                        std::to_string(counts.window) +
                        " and no smoothing; distribution undefined");
  }
  dist.probs.reserve(counts.counts.size());
  for (const auto c : counts.counts) {
    dist.probs.push_back((static_cast<double>(c) + epsilon) / denominator);
  }
  return dist;
}

PatternDistribution category_distribution(std::span<const SentenceFeatureTrack> tracks,
                                          std::span<const std::size_t> members,
                                          int window, double epsilon,
                                          std::string category) {
  PatternCounts counts(window);
  for (const auto index : members) counts += transition_patterns(tracks[index], window);
  return make_distribution(counts, epsilon, std::move(category));
}

std::vector<PatternDistribution> partition_distributions(
    const Corpus& corpus, std::span<const SentenceFeatureTrack> tracks,
    LabelKind kind, int window, double epsilon) {
  if (tracks.size() != corpus.size()) {
    throw AnalysisError("expected one track per corpus document");
  }
  std::vector<PatternDistribution> out;
  for (const auto& [label, members] : corpus.partition(kind)) {
    out.push_back(category_distribution(tracks, members, window, epsilon, label));
  }
  return out;
}

namespace {
void check_comparable(const PatternDistribution& p, const PatternDistribution& q) {
  if (p.window != q.window) {
    throw AnalysisError("cannot compare distributions of window " +
                        std::to_string(p.window) + " and " + std::to_string(q.window));
  }
}
}  // namespace

double kl_divergence(const PatternDistribution& p, const PatternDistribution& q) {
  check_comparable(p, q);
  return kl_divergence(std::span<const double>(p.probs), std::span<const double>(q.probs));
}

double symmetrized_kl(const PatternDistribution& p, const PatternDistribution& q) {
  check_comparable(p, q);
  return symmetrized_kl(std::span<const double>(p.probs), std::span<const double>(q.probs));
}

}  // namespace stylo
