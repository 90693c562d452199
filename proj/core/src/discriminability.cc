#include "stylo/discriminability.h"

#include <algorithm>
#include <set>

#include "parallel.h"
#include "stylo/error.h"
#include "stylo/rng.h"
#include "stylo/stats.h"

namespace stylo {

double partition_divergence_sum(std::span<const PatternDistribution> distributions) {
  if (distributions.size() < 2) {
    throw AnalysisError("a partition needs at least two categories, got " +
                        std::to_string(distributions.size()));
  }
  const auto& first = distributions.front();
  for (const auto& d : distributions) {
    if (d.window != first.window) {
      throw AnalysisError("partition mixes window sizes " + std::to_string(first.window) +
                          " and " + std::to_string(d.window));
    }
    if (d.epsilon != first.epsilon) {
      throw AnalysisError("partition mixes smoothing constants");
    }
  }
  std::vector<double> pairs;
  pairs.reserve(distributions.size() * (distributions.size() - 1) / 2);
  for (std::size_t i = 0; i < distributions.size(); ++i) {
    for (std::size_t j = i + 1; j < distributions.size(); ++j) {
      pairs.push_back(symmetrized_kl(distributions[i], distributions[j]));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  CompensatedSum sum;
  for (const double v : pairs) sum.add(v);
  return sum.value();
}

ResampleResult resample_divergence(std::span<const PatternDistribution> candidates,
                                   const ResampleOptions& options) {
  if (options.sample_size < 2) throw InputError("sample size must be at least 2");
  if (options.rounds < 1) throw InputError("rounds must be at least 1");
  if (candidates.size() < options.sample_size) {
    throw AnalysisError("cannot draw " + std::to_string(options.sample_size) +
                        " categories from " + std::to_string(candidates.size()));
  }
  ResampleResult result;
  result.round_sums.resize(options.rounds);
  result.round_members.resize(options.rounds);
  detail::parallel_for(options.rounds, options.threads, [&](std::size_t round) {
    std::mt19937_64 engine(derive_round_seed(options.seed, round));
    auto members = sample_without_replacement(candidates.size(), options.sample_size, engine);
    std::vector<PatternDistribution> sample;
    sample.reserve(members.size());
    for (const auto m : members) sample.push_back(candidates[m]);
    result.round_sums[round] = partition_divergence_sum(sample);
    result.round_members[round] = std::move(members);
  });
  CompensatedSum sum;
  for (const double v : result.round_sums) sum.add(v);
  result.mean = sum.value() / static_cast<double>(options.rounds);
  return result;
}

std::vector<std::string> eligible_authors(const Corpus& corpus,
                                          std::span<const SentenceFeatureTrack> tracks,
                                          int reference_window,
                                          std::size_t min_windows) {
  if (tracks.size() != corpus.size()) {
    throw AnalysisError("expected one track per corpus document");
  }
  const auto n = static_cast<std::size_t>(reference_window);
  std::vector<std::string> out;
  for (const auto& [author, members] : corpus.partition(LabelKind::kAuthor)) {
    std::size_t windows = 0;
    for (const auto i : members) {
      const auto length = tracks[i].bits.size();
      if (length >= n) windows += length - n + 1;
    }
    if (windows >= min_windows) out.push_back(author);
  }
  return out;
}

namespace {

std::vector<PatternDistribution> author_distributions(
    const Corpus& corpus, std::span<const SentenceFeatureTrack> tracks,
    const std::vector<std::string>& authors, int window, double epsilon) {
  const auto partition = corpus.partition(LabelKind::kAuthor);
  std::vector<PatternDistribution> out;
  out.reserve(authors.size());
  for (const auto& author : authors) {
    out.push_back(category_distribution(tracks, partition.at(author), window, epsilon, author));
  }
  return out;
}

std::string too_few_authors(std::size_t eligible, std::size_t needed,
                            std::size_t min_windows, int reference_window) {
  return "only " + std::to_string(eligible) + " authors have at least " +
         std::to_string(min_windows) + " windows of size " +
         std::to_string(reference_window) + "; " + std::to_string(needed) +
         " are needed per sample";
}

}  // namespace

ResampleResult resampled_author_divergence(const Corpus& corpus,
                                           std::span<const SentenceFeatureTrack> tracks,
                                           int window, double epsilon,
                                           const ResampleOptions& options,
                                           const AuthorSampling& sampling) {
  const int reference = sampling.reference_window > 0 ? sampling.reference_window : window;
  pattern_space(window);
  pattern_space(reference);
  const auto authors = eligible_authors(corpus, tracks, reference, sampling.min_windows);
  if (authors.size() < options.sample_size) {
    throw AnalysisError(too_few_authors(authors.size(), options.sample_size,
                                        sampling.min_windows, reference));
  }
  const auto distributions = author_distributions(corpus, tracks, authors, window, epsilon);
  return resample_divergence(distributions, options);
}

const DivergenceRow* DivergenceReport::find(int window, LabelKind partition) const {
  for (const auto& row : rows) {
    if (row.window == window && row.partition == partition) return &row;
  }
  return nullptr;
}

std::optional<double> DivergenceReport::gap(int window) const {
  const auto* genre = find(window, LabelKind::kGenre);
  const auto* author = find(window, LabelKind::kAuthor);
  if (!genre || !author) return std::nullopt;
  return author->divergence_sum - genre->divergence_sum;
}

DivergenceReport window_sweep(const Corpus& corpus,
                              std::span<const SentenceFeatureTrack> tracks,
                              std::string feature_name, const SweepOptions& options) {
  if (tracks.size() != corpus.size()) {
    throw AnalysisError("expected one track per corpus document");
  }
  if (options.windows.empty()) throw InputError("no window sizes requested");
  const std::set<int> windows(options.windows.begin(), options.windows.end());
  for (const int w : windows) pattern_space(w);
  if (!(options.epsilon >= 0.0)) throw InputError("smoothing epsilon must be >= 0");
  if (options.sample_size < 2) throw InputError("sample size must be at least 2");
  if (options.rounds < 1) throw InputError("rounds must be at least 1");

  DivergenceReport report;
  report.epsilon = options.epsilon;
  report.feature_name = std::move(feature_name);

  std::vector<DivergenceRow> genre_rows;
  const auto genres = corpus.partition(LabelKind::kGenre);
  report.genre_categories = genres.size();
  if (genres.size() < 2) {
    report.notes.push_back("genre: " + std::to_string(genres.size()) +
                           " genre label(s); at least two are needed");
  } else {
    try {
      for (const int w : windows) {
        const auto dists =
            partition_distributions(corpus, tracks, LabelKind::kGenre, w, options.epsilon);
        DivergenceRow row;
        row.window = w;
        row.partition = LabelKind::kGenre;
        row.divergence_sum = partition_divergence_sum(dists);
        row.rounds = 1;
        row.sample_size = dists.size();
        row.seed = options.seed;
        row.round_sums = {row.divergence_sum};
        genre_rows.push_back(std::move(row));
      }
    } catch (const AnalysisError& e) {
      genre_rows.clear();
      report.notes.push_back(std::string("genre: ") + e.what());
    }
  }

  std::vector<DivergenceRow> author_rows;
  const int reference = *windows.rbegin();
  const auto authors =
      eligible_authors(corpus, tracks, reference, options.min_author_windows);
  report.eligible_authors = authors.size();
  if (authors.size() < options.sample_size) {
    report.notes.push_back("author: " + too_few_authors(authors.size(), options.sample_size,
                                                        options.min_author_windows,
                                                        reference));
  } else {
    try {
      const ResampleOptions resample{options.sample_size, options.rounds, options.seed,
                                     options.threads};
      for (const int w : windows) {
        const auto dists = author_distributions(corpus, tracks, authors, w, options.epsilon);
        auto result = resample_divergence(dists, resample);
        DivergenceRow row;
        row.window = w;
        row.partition = LabelKind::kAuthor;
        row.divergence_sum = result.mean;
        row.rounds = options.rounds;
        row.sample_size = options.sample_size;
        row.seed = options.seed;
        row.round_sums = std::move(result.round_sums);
        author_rows.push_back(std::move(row));
      }
    } catch (const AnalysisError& e) {
      author_rows.clear();
      report.notes.push_back(std::string("author: ") + e.what());
    }
  }

  if (genre_rows.empty() && author_rows.empty()) {
    std::string message = "window sweep produced no rows";
    for (const auto& note : report.notes) message += "; " + note;
    throw AnalysisError(message);
  }
  for (const int w : windows) {
    for (auto* rows : {&genre_rows, &author_rows}) {
      for (auto& row : *rows) {
        if (row.window == w) report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace stylo
