#include <benchmark/benchmark.h>

#include <random>

#include "stylo/configurational.h"
#include "stylo/discriminability.h"
#include "stylo/features.h"
#include "stylo/stats.h"
#include "stylo/synth/synthetic.h"

namespace {

using namespace stylo;

void BM_TransitionPatterns(benchmark::State& state) {
  const int window = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::vector<std::uint8_t> bits(100'000);
  for (auto& b : bits) b = rng() % 10 == 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_patterns(bits, window));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bits.size()));
}
BENCHMARK(BM_TransitionPatterns)->DenseRange(1, 5);

void BM_AnalyzeText(benchmark::State& state) {
  synth::MarkovCorpusOptions options;
  options.authors = 10;
  options.documents_per_author = 10;
  const auto corpus = synth::markov_corpus(options);
  std::int64_t bytes = 0;
  for (auto _ : state) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      benchmark::DoNotOptimize(analyze_text(corpus[i].id, corpus[i].text));
      bytes += static_cast<std::int64_t>(corpus[i].text.size());
    }
  }
  state.SetBytesProcessed(bytes);
}
BENCHMARK(BM_AnalyzeText);

void BM_DocumentFrequencies(benchmark::State& state) {
  synth::PlantedCorpusOptions options;
  options.documents = 1000;
  const auto planted = synth::planted_corpus(options);
  for (auto _ : state) {
    benchmark::DoNotOptimize(DocumentFrequencies(planted.corpus));
  }
}
BENCHMARK(BM_DocumentFrequencies)->Unit(benchmark::kMillisecond);

void BM_MannWhitney(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(2);
  std::normal_distribution<double> normal;
  std::vector<double> xs(n), ys(n);
  for (auto& x : xs) x = normal(rng);
  for (auto& y : ys) y = normal(rng) + 0.2;
  for (auto _ : state) benchmark::DoNotOptimize(mann_whitney_u(xs, ys));
}
BENCHMARK(BM_MannWhitney)->Arg(8)->Arg(20)->Arg(1000);

void BM_WindowSweep(benchmark::State& state) {
  synth::MarkovCorpusOptions options;
  options.authors = static_cast<std::size_t>(state.range(0));
  const auto corpus = synth::markov_corpus(options);
  const auto feature = make_multi_clause_feature(builtin_lexicon(lexicon_names::kClauseMarkers));
  const auto tracks = corpus_tracks(corpus, feature);
  SweepOptions sweep;
  for (auto _ : state) {
    benchmark::DoNotOptimize(window_sweep(corpus, tracks, feature.name, sweep));
  }
}
BENCHMARK(BM_WindowSweep)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
