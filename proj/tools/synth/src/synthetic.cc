#include "stylo/synth/synthetic.h"

#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "stylo/rng.h"

namespace stylo::synth {
namespace {

// None of these is a clause marker, an abbreviation or a lexicon entry.
constexpr std::array<const char*, 16> kNouns{
    "committee", "council", "river",  "market", "train",   "garden", "doctor", "harbour",
    "farmer",    "engine",  "museum", "bridge", "teacher", "ship",   "village", "orchestra"};
constexpr std::array<const char*, 12> kVerbs{
    "praised", "visited",  "examined", "crossed", "painted", "repaired",
    "watched", "followed", "opened",   "closed",  "carried", "measured"};
constexpr std::array<const char*, 8> kAdverbs{"quietly", "early", "again",   "slowly",
                                              "twice",   "today", "briefly", "later"};
constexpr std::array<const char*, 4> kJoiners{"because", "while", "although", "when"};

template <std::size_t N>
const char* pick(const std::array<const char*, N>& words, std::mt19937_64& rng) {
  return words[uniform_below(rng, N)];
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Pronounceable lowercase nonce word that the normalizer leaves unchanged.
std::string nonce_word(std::size_t index, std::string_view prefix) {
  static constexpr std::array<const char*, 10> kOnsets{"b", "d", "f", "g", "k",
                                                       "l", "m", "p", "t", "v"};
  static constexpr std::array<const char*, 5> kVowels{"a", "o", "u", "i", "e"};
  std::string word(prefix);
  std::size_t n = index;
  do {
    word += kOnsets[n % kOnsets.size()];
    n /= kOnsets.size();
    word += kVowels[n % kVowels.size()];
    n /= kVowels.size();
  } while (n > 0);
  word += "r";
  return word;
}

}  // namespace

std::string render_sentence(bool multi_clause, std::mt19937_64& rng) {
  std::string s = "The ";
  s += pick(kNouns, rng);
  s += ' ';
  s += pick(kVerbs, rng);
  s += " the ";
  s += pick(kNouns, rng);
  if (multi_clause) {
    s += ' ';
    s += pick(kJoiners, rng);
    s += " the ";
    s += pick(kNouns, rng);
    s += ' ';
    s += pick(kVerbs, rng);
    s += ' ';
    s += pick(kAdverbs, rng);
  }
  s += '.';
  return s;
}

std::vector<MarkovAuthor> markov_authors(std::size_t count, double ones, double min_stay,
                                         double max_stay) {
  if (!(max_stay < 1.0) || min_stay < 0.0 || min_stay > max_stay || !(ones > 0.0 && ones < 1.0)) {
    throw std::invalid_argument("markov_authors: invalid chain parameters");
  }
  std::vector<MarkovAuthor> authors;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count > 1 ? static_cast<double>(i) / static_cast<double>(count - 1) : 0.0;
    MarkovAuthor a;
    a.name = "author" + std::string(i < 10 ? "0" : "") + std::to_string(i);
    a.stay = min_stay + t * (max_stay - min_stay);
    // Solve enter / (1 - stay + enter) = ones.
    a.enter = ones * (1.0 - a.stay) / (1.0 - ones);
    if (a.enter > 1.0) throw std::invalid_argument("markov_authors: stationary share unreachable");
    authors.push_back(std::move(a));
  }
  return authors;
}

std::vector<std::uint8_t> markov_bits(const MarkovAuthor& author, std::size_t length,
                                      std::mt19937_64& rng) {
  std::vector<std::uint8_t> bits;
  bits.reserve(length);
  bool state = uniform01(rng) < author.stationary();
  for (std::size_t i = 0; i < length; ++i) {
    if (i > 0) state = uniform01(rng) < (state ? author.stay : author.enter);
    bits.push_back(state ? 1 : 0);
  }
  return bits;
}

Corpus markov_corpus(const MarkovCorpusOptions& options) {
  const auto authors =
      markov_authors(options.authors, options.ones, options.min_stay, options.max_stay);
  std::mt19937_64 rng(options.seed);
  std::vector<Document> documents;
  documents.reserve(options.authors * options.documents_per_author);
  for (const auto& author : authors) {
    for (std::size_t d = 0; d < options.documents_per_author; ++d) {
      Document doc;
      doc.id = author.name + "/doc" + std::to_string(d);
      doc.author = author.name;
      doc.genre = "genre" + std::to_string(uniform_below(rng, options.genres));
      for (const auto bit : markov_bits(author, options.sentences_per_document, rng)) {
        if (!doc.text.empty()) doc.text += ' ';
        doc.text += render_sentence(bit != 0, rng);
      }
      documents.push_back(std::move(doc));
    }
  }
  return Corpus(std::move(documents), {"synthetic:markov", CorpusFormat::kJsonl});
}

PlantedCorpus planted_corpus(const PlantedCorpusOptions& options) {
  std::mt19937_64 rng(options.seed);
  PlantedCorpus out;
  for (std::size_t c = 0; c < options.categories; ++c) {
    out.categories.push_back("category" + std::to_string(c));
    std::vector<std::string> words;
    for (std::size_t k = 0; k < options.planted_per_category; ++k) {
      words.push_back(nonce_word(c * options.planted_per_category + k, "zy"));
    }
    out.planted.push_back(std::move(words));
  }
  std::vector<std::string> background;
  std::vector<double> cumulative;
  double total = 0.0;
  for (std::size_t i = 0; i < options.background_vocabulary; ++i) {
    background.push_back(nonce_word(i, "q"));
    total += 1.0 / static_cast<double>(i + 1);
    cumulative.push_back(total);
  }
  auto draw_background = [&] {
    const double u = uniform01(rng) * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return background[std::min<std::size_t>(it - cumulative.begin(), background.size() - 1)];
  };

  std::vector<Document> documents;
  for (std::size_t d = 0; d < options.documents; ++d) {
    const std::size_t c = d % options.categories;
    std::vector<std::string> words;
    for (std::size_t w = 0; w < options.words_per_document; ++w) words.push_back(draw_background());
    for (const auto& planted : out.planted[c]) {
      if (uniform01(rng) < options.plant_probability) {
        words.insert(words.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, words.size() + 1)),
                     planted);
      }
    }
    Document doc;
    doc.id = "doc" + std::to_string(d);
    doc.genre = out.categories[c];
    for (std::size_t i = 0; i < words.size(); ++i) {
      const bool start = i % 10 == 0;
      if (i > 0) doc.text += start ? ". " : " ";
      std::string word = words[i];
      if (start) word[0] = static_cast<char>(word[0] - 'a' + 'A');
      doc.text += word;
    }
    doc.text += '.';
    documents.push_back(std::move(doc));
  }
  out.corpus = Corpus(std::move(documents), {"synthetic:planted", CorpusFormat::kJsonl});
  return out;
}

void write_jsonl(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& doc : corpus.documents()) {
    nlohmann::ordered_json record{{"id", doc.id}, {"text", doc.text}};
    if (doc.genre) record["genre"] = *doc.genre;
    if (doc.author) record["author"] = *doc.author;
    out << record.dump() << '\n';
  }
}

}  // namespace stylo::synth
