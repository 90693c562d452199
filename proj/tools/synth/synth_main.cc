// Writes synthetic labeled corpora as JSONL for demos and experiments.
#include <CLI11.hpp>
#include <iostream>

#include "stylo/synth/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate synthetic labeled corpora", "stylo-synth"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "JSONL file to write")->required();

  stylo::synth::MarkovCorpusOptions markov;
  auto* m = app.add_subcommand("markov", "Authors as two-state clause chains, random genres");
  m->add_option("--authors", markov.authors)->capture_default_str();
  m->add_option("--documents-per-author", markov.documents_per_author)->capture_default_str();
  m->add_option("--sentences", markov.sentences_per_document)->capture_default_str();
  m->add_option("--genres", markov.genres)->capture_default_str();
  m->add_option("--ones", markov.ones, "Stationary share of multi-clause sentences")
      ->capture_default_str();
  m->add_option("--min-stay", markov.min_stay)->capture_default_str();
  m->add_option("--max-stay", markov.max_stay)->capture_default_str();
  m->add_option("--seed", markov.seed)->capture_default_str();

  stylo::synth::PlantedCorpusOptions planted;
  auto* p = app.add_subcommand("planted", "Category-exclusive keywords in shared background text");
  p->add_option("--categories", planted.categories)->capture_default_str();
  p->add_option("--documents", planted.documents)->capture_default_str();
  p->add_option("--planted", planted.planted_per_category)->capture_default_str();
  p->add_option("--seed", planted.seed)->capture_default_str();
  app.fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (m->parsed()) {
      stylo::synth::write_jsonl(stylo::synth::markov_corpus(markov), output);
    } else {
      const auto result = stylo::synth::planted_corpus(planted);
      stylo::synth::write_jsonl(result.corpus, output);
      for (std::size_t c = 0; c < result.categories.size(); ++c) {
        std::cout << result.categories[c] << '\t';
        for (std::size_t k = 0; k < result.planted[c].size(); ++k) {
          std::cout << (k ? "," : "") << result.planted[c][k];
        }
        std::cout << '\n';
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
