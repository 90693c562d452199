#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "stylo/corpus.h"

namespace stylo::synth {

// Renders one sentence that the built-in clause markers score as
// single-clause (multi_clause = false) or two-clause (true).
std::string render_sentence(bool multi_clause, std::mt19937_64& rng);

// Two-state chain over the multi-clause bit. stay = P(1 | 1),
// enter = P(1 | 0); the stationary share of 1s is enter / (1 - stay + enter).
struct MarkovAuthor {
  std::string name;
  double stay = 0.1;
  double enter = 0.1;

  double stationary() const { return enter / (1.0 - stay + enter); }
};

// Authors sharing the stationary share `ones` with stay probabilities
// spread evenly over [min_stay, max_stay]. Requires max_stay < 1.
std::vector<MarkovAuthor> markov_authors(std::size_t count, double ones, double min_stay,
                                         double max_stay);

std::vector<std::uint8_t> markov_bits(const MarkovAuthor& author, std::size_t length,
                                      std::mt19937_64& rng);

struct MarkovCorpusOptions {
  std::size_t authors = 20;
  std::size_t documents_per_author = 10;
  std::size_t sentences_per_document = 40;
  std::size_t genres = 8;
  double ones = 0.1;
  double min_stay = 0.0;
  double max_stay = 0.8;
  std::uint64_t seed = 1;
};

// Every document carries an author label and a genre drawn uniformly at
// random, so genre is independent of sentence structure.
Corpus markov_corpus(const MarkovCorpusOptions& options);

struct PlantedCorpusOptions {
  std::size_t categories = 4;
  std::size_t documents = 200;
  std::size_t planted_per_category = 5;
  std::size_t background_vocabulary = 400;
  std::size_t words_per_document = 120;
  double plant_probability = 0.5;
  std::uint64_t seed = 1;
};

struct PlantedCorpus {
  Corpus corpus;
  // planted[c] are the words exclusive to genre category_name(c).
  std::vector<std::vector<std::string>> planted;
  std::vector<std::string> categories;
};

// Shared Zipf-weighted background text with category-exclusive words
// mixed into each document of that category.
PlantedCorpus planted_corpus(const PlantedCorpusOptions& options);

void write_jsonl(const Corpus& corpus, const std::filesystem::path& path);

}  // namespace stylo::synth
