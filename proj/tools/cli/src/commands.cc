#include "stylo/cli/commands.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "json.hpp"
#include "stylo/configurational.h"
#include "stylo/error.h"
#include "stylo/stats.h"

namespace stylo::cli {
namespace {

namespace fs = std::filesystem;

std::vector<LabelKind> partitions_of(const RunConfig& config) {
  if (config.partition == "both") return {LabelKind::kGenre, LabelKind::kAuthor};
  return {parse_label_kind(config.partition)};
}

fs::path prepare_output(const RunConfig& config) {
  const fs::path dir(config.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void write_file(const fs::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw InputError("error writing " + path.string());
}

fs::path write_config(const RunConfig& config, const fs::path& dir) {
  const auto path = dir / kConfigFileName;
  write_file(path, config.serialize());
  return path;
}

std::vector<std::string> labels_of(const Partition& partition) {
  std::vector<std::string> out;
  for (const auto& [label, members] : partition) out.push_back(label);
  return out;
}

std::string sign_of(const RankTestResult& r) {
  if (!r.significant) return ".";
  return r.x_higher() ? "+" : "-";
}

}  // namespace

Resources load_resources(const RunConfig& config) {
  config.validate();
  if (config.corpus.empty()) throw InputError("no corpus given (use --corpus)");
  IngestPolicy policy;
  policy.allow_empty_text = config.allow_empty;
  Resources r{ingest_corpus(config.corpus, parse_corpus_format(config.format), policy),
              config.abbreviations.empty() ? Abbreviations::builtin()
                                           : Abbreviations::load(config.abbreviations),
              MarkerLexicons::builtin(),
              builtin_lexicon(lexicon_names::kClauseMarkers)};
  auto lexicon = [&](std::string_view name) {
    const auto it = config.lexicons.find(std::string(name));
    return it == config.lexicons.end() ? builtin_lexicon(name)
                                       : MarkerLexicon::load(it->second, std::string(name));
  };
  r.markers.personal_pronouns = lexicon(lexicon_names::kPersonalPronouns);
  r.markers.demonstratives = lexicon(lexicon_names::kDemonstratives);
  r.markers.private_verbs = lexicon(lexicon_names::kPrivateVerbs);
  r.markers.opinion = lexicon(lexicon_names::kOpinion);
  r.markers.argument = lexicon(lexicon_names::kArgument);
  r.clause_markers = lexicon(lexicon_names::kClauseMarkers);
  return r;
}

SentenceFeature clause_feature(const RunConfig& config, const Resources& resources) {
  return make_multi_clause_feature(resources.clause_markers, config.clause_threshold);
}

std::vector<std::string> file_stems(const std::vector<std::string>& labels) {
  std::vector<std::string> stems;
  std::set<std::string> used;
  for (const auto& label : labels) {
    std::string stem;
    for (const char c : label) {
      const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
      stem.push_back(safe ? c : '_');
    }
    if (stem.empty() || stem.front() == '.') stem.insert(stem.begin(), '_');
    std::string candidate = stem;
    for (int k = 2; used.count(candidate); ++k) candidate = fmt::format("{}-{}", stem, k);
    used.insert(candidate);
    stems.push_back(std::move(candidate));
  }
  return stems;
}

void cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream&) {
  config.validate();
  if (config.corpus.empty()) throw InputError("no corpus given (use --corpus)");
  IngestPolicy policy;
  policy.allow_empty_text = config.allow_empty;
  const auto corpus = ingest_corpus(config.corpus, parse_corpus_format(config.format), policy);
  fmt::print(out, "# corpus {} ({})\n", corpus.provenance().source,
             to_string(corpus.provenance().format));
  fmt::print(out, "partition\tlabel\tdocuments\n");
  for (const auto kind : {LabelKind::kGenre, LabelKind::kAuthor}) {
    const auto partition = corpus.partition(kind);
    for (const auto& [label, members] : partition) {
      fmt::print(out, "{}\t{}\t{}\n", to_string(kind), label, members.size());
    }
    const auto tagged = corpus.labeled_count(kind);
    fmt::print(out, "{}\t[tagged]\t{}\n", to_string(kind), tagged);
    fmt::print(out, "{}\t[untagged]\t{}\n", to_string(kind), corpus.size() - tagged);
    fmt::print(out, "{}\t[total]\t{}\n", to_string(kind), corpus.size());
  }
}

std::vector<fs::path> cmd_typical(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const auto resources = load_resources(config);
  const auto& corpus = resources.corpus;
  const DocumentFrequencies df(corpus, resources.abbreviations, config.threads);
  const auto dir = prepare_output(config);
  std::vector<fs::path> written{write_config(config, dir)};
  if (config.min_df > corpus.size()) {
    fmt::print(log, "warning: min_df {} exceeds the {} documents in the corpus; tables are empty\n",
               config.min_df, corpus.size());
  }
  for (const auto kind : partitions_of(config)) {
    const auto partition = corpus.partition(kind);
    const auto labels = labels_of(partition);
    const auto stems = file_stems(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::vector<TypicalWordRow> rows;
      try {
        rows = typical_words(corpus, df, kind, labels[i], config.min_df, config.top_k);
      } catch (const AnalysisError& e) {
        fmt::print(log, "warning: {} '{}': {}\n", to_string(kind), labels[i], e.what());
        continue;
      }
      std::string text = "rank\tword\tchi_squared\tdf_in\tdf_out\tdirection\n";
      std::string summary;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        text += fmt::format("{}\t{}\t{:.6f}\t{}\t{}\t{}\n", r + 1, row.word, row.chi_squared,
                            row.df_in, row.df_out, to_string(row.direction));
        summary += (r ? ", " : "") + row.word;
      }
      const auto path = dir / fmt::format("typical_{}_{}.tsv", to_string(kind), stems[i]);
      write_file(path, text);
      written.push_back(path);
      fmt::print(out, "{}\t{}\t{}\n", to_string(kind), labels[i], summary);
    }
  }
  return written;
}

std::vector<fs::path> cmd_markers(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const auto resources = load_resources(config);
  const auto& corpus = resources.corpus;
  const auto dir = prepare_output(config);
  std::vector<fs::path> written{write_config(config, dir)};

  // Marker vectors for every document that has words.
  std::vector<std::optional<MarkerVector>> vectors(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!corpus[i].genre && !corpus[i].author) continue;
    const auto doc = analyze_text(corpus[i].id, corpus[i].text, resources.abbreviations);
    try {
      vectors[i] = measure_markers(doc, resources.markers);
    } catch (const AnalysisError& e) {
      fmt::print(log, "warning: skipping {}\n", e.what());
    }
  }

  MannWhitneyOptions test;
  test.alpha = config.alpha;
  test.exact_max_product = config.exact_max_product;
  const auto& names = MarkerVector::names();

  for (const auto kind : partitions_of(config)) {
    const auto partition = corpus.partition(kind);
    std::string signs = "category\tdocuments";
    for (const auto name : names) signs += fmt::format("\t{}", name);
    signs += "\n";
    std::string values =
        "category\tmarker\tn_in\tn_out\tmean_in\tmean_out\tu\tp_value\tsign\n";
    fmt::print(out, "{}", signs);

    for (const auto& [label, members] : partition) {
      std::array<std::vector<double>, MarkerVector::kSize> in, rest;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& doc_label = corpus[i].label(kind);
        if (!doc_label || !vectors[i]) continue;
        const auto v = vectors[i]->values();
        auto& target = *doc_label == label ? in : rest;
        for (std::size_t m = 0; m < v.size(); ++m) target[m].push_back(v[m]);
      }
      const std::size_t n_in = in[0].size(), n_out = rest[0].size();
      const bool testable =
          n_in >= config.min_category_docs && n_out >= config.min_category_docs;
      if (!testable) {
        fmt::print(log, "warning: {} '{}' has {} documents against {}; below minimum {}, "
                   "reported as not significant\n",
                   to_string(kind), label, n_in, n_out, config.min_category_docs);
      }
      std::string row = fmt::format("{}\t{}", label, n_in);
      for (std::size_t m = 0; m < names.size(); ++m) {
        auto mean = [](const std::vector<double>& xs) {
          CompensatedSum s;
          for (const double x : xs) s.add(x);
          return xs.empty() ? 0.0 : s.value() / static_cast<double>(xs.size());
        };
        std::string sign = ".";
        std::string u = "", p = "";
        if (testable) {
          const auto r = mann_whitney_u(in[m], rest[m], test);
          sign = sign_of(r);
          u = fmt::format("{:.1f}", r.u_statistic);
          p = fmt::format("{:.8f}", r.p_value);
        }
        row += "\t" + sign;
        values += fmt::format("{}\t{}\t{}\t{}\t{:.6f}\t{:.6f}\t{}\t{}\t{}\n", label, names[m],
                              n_in, n_out, mean(in[m]), mean(rest[m]), u, p, sign);
      }
      row += "\n";
      signs += row;
      fmt::print(out, "{}", row);
    }
    const auto sign_path = dir / fmt::format("markers_{}.tsv", to_string(kind));
    const auto value_path = dir / fmt::format("markers_{}_values.tsv", to_string(kind));
    write_file(sign_path, signs);
    write_file(value_path, values);
    written.push_back(sign_path);
    written.push_back(value_path);
  }
  return written;
}

std::vector<fs::path> cmd_distributions(const RunConfig& config, std::ostream& out,
                                        std::ostream& log) {
  const auto resources = load_resources(config);
  const auto& corpus = resources.corpus;
  const auto feature = clause_feature(config, resources);
  const auto tracks = corpus_tracks(corpus, feature, resources.abbreviations, config.threads);
  const auto dir = prepare_output(config);
  std::vector<fs::path> written{write_config(config, dir)};

  std::set<int> windows(config.windows.begin(), config.windows.end());
  for (const auto kind : partitions_of(config)) {
    const auto partition = corpus.partition(kind);
    if (partition.empty()) {
      fmt::print(log, "warning: no {} labels in the corpus\n", to_string(kind));
    }
    std::string text = "category\twindow\tpattern\tcount\tprob\tepsilon\n";
    for (const int w : windows) {
      for (const auto& [label, members] : partition) {
        PatternDistribution dist;
        try {
          dist = category_distribution(tracks, members, w, config.epsilon, label);
        } catch (const AnalysisError& e) {
          fmt::print(log, "warning: {}\n", e.what());
          continue;
        }
        for (std::size_t p = 0; p < dist.probs.size(); ++p) {
          text += fmt::format("{}\t{}\t{}\t{}\t{:.10f}\t{}\n", label, w, pattern_string(p, w),
                              dist.counts[p], dist.probs[p], config.epsilon);
        }
      }
    }
    const auto path = dir / fmt::format("distributions_{}.tsv", to_string(kind));
    write_file(path, text);
    written.push_back(path);
    fmt::print(out, "{}\n", path.string());
  }
  return written;
}

DivergenceReport cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const auto resources = load_resources(config);
  const auto& corpus = resources.corpus;
  const auto feature = clause_feature(config, resources);
  const auto tracks = corpus_tracks(corpus, feature, resources.abbreviations, config.threads);

  SweepOptions options;
  options.windows = config.windows;
  options.epsilon = config.epsilon;
  options.sample_size = config.sample_size;
  options.rounds = config.rounds;
  options.seed = config.seed;
  options.min_author_windows = config.min_author_windows;
  options.threads = config.threads;
  auto report = window_sweep(corpus, tracks, feature.name, options);
  for (const auto& note : report.notes) fmt::print(log, "warning: {}\n", note);

  const auto dir = prepare_output(config);
  write_config(config, dir);

  std::string tsv = "window\tpartition\tdivergence_sum\trounds\tsample_size\tseed\tepsilon\tfeature\n";
  for (const auto& row : report.rows) {
    tsv += fmt::format("{}\t{}\t{:.10f}\t{}\t{}\t{}\t{}\t{}\n", row.window,
                       to_string(row.partition), row.divergence_sum, row.rounds,
                       row.sample_size, row.seed, report.epsilon, report.feature_name);
  }
  write_file(dir / "sweep.tsv", tsv);

  nlohmann::ordered_json audit;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  {
    std::string_view text = config.serialize();
    while (!text.empty()) {
      const auto eol = text.find('\n');
      const auto line = text.substr(0, eol);
      text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
      const auto eq = line.find('=');
      if (line.empty() || line.front() == '#' || eq == std::string_view::npos) continue;
      cfg[std::string(line.substr(0, eq))] = std::string(line.substr(eq + 1));
    }
  }
  audit["config"] = cfg;
  audit["feature"] = report.feature_name;
  audit["epsilon"] = report.epsilon;
  audit["resampler"] = report.resampler;
  audit["genre_categories"] = report.genre_categories;
  audit["eligible_authors"] = report.eligible_authors;
  audit["notes"] = report.notes;
  audit["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    audit["rows"].push_back({{"window", row.window},
                             {"partition", std::string(to_string(row.partition))},
                             {"divergence_sum", row.divergence_sum},
                             {"rounds", row.rounds},
                             {"sample_size", row.sample_size},
                             {"seed", row.seed},
                             {"round_sums", row.round_sums}});
  }
  audit["author_minus_genre"] = nlohmann::ordered_json::array();
  std::set<int> windows(config.windows.begin(), config.windows.end());
  fmt::print(out, "window\tgenre\tauthor\tauthor-genre\n");
  for (const int w : windows) {
    const auto* g = report.find(w, LabelKind::kGenre);
    const auto* a = report.find(w, LabelKind::kAuthor);
    const auto gap = report.gap(w);
    if (gap) audit["author_minus_genre"].push_back({{"window", w}, {"gap", *gap}});
    fmt::print(out, "{}\t{}\t{}\t{}\n", w, g ? fmt::format("{:.4f}", g->divergence_sum) : "-",
               a ? fmt::format("{:.4f}", a->divergence_sum) : "-",
               gap ? fmt::format("{:.4f}", *gap) : "-");
  }
  write_file(dir / "sweep.json", audit.dump(2) + "\n");
  return report;
}

std::vector<fs::path> cmd_dump_lexicons(const RunConfig& config, std::ostream& out) {
  const auto dir = prepare_output(config);
  std::vector<fs::path> written;
  for (const auto name : builtin_lexicon_names()) {
    const auto path = dir / fmt::format("{}.txt", name);
    write_file(path, builtin_lexicon_text(name));
    written.push_back(path);
  }
  const auto path = dir / "abbreviations.txt";
  write_file(path, builtin_abbreviations_text());
  written.push_back(path);
  for (const auto& p : written) fmt::print(out, "{}\n", p.string());
  return written;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stylometric measurements over labeled text corpora", "stylo"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::pair<std::string, std::string>> settings;
  app.add_option("--config", config_path,
                 std::string("key=value config file (default: $") + kConfigEnvVar + ")");
  auto setting = [&](const std::string& flag, const std::string& key, const std::string& help) {
    return app.add_option_function<std::string>(
        flag, [&settings, key](const std::string& v) { settings.emplace_back(key, v); }, help);
  };
  setting("-c,--corpus", "corpus", "Corpus path (JSONL file or directory)");
  setting("--format", "format", "Corpus format: jsonl | directory");
  app.add_flag_callback("--allow-empty", [&] { settings.emplace_back("allow_empty", "true"); },
                        "Accept documents with empty text");
  setting("--partition", "partition", "Label kind to analyse: genre | author | both");
  setting("--abbreviations", "abbreviations", "Abbreviation guard list file");
  app.add_option_function<std::vector<std::string>>(
      "--lexicon",
      [&](const std::vector<std::string>& items) {
        for (const auto& item : items) {
          const auto eq = item.find('=');
          if (eq == std::string::npos) throw CLI::ValidationError("--lexicon", "expected name=path");
          settings.emplace_back("lexicon." + item.substr(0, eq), item.substr(eq + 1));
        }
      },
      "Override a built-in lexicon: name=path");
  setting("--windows", "windows", "Comma-separated window sizes in [1,5]");
  setting("--epsilon", "epsilon", "Additive smoothing per pattern");
  setting("--alpha", "alpha", "Significance level for the rank test");
  setting("--exact-max-product", "exact_max_product", "Largest n1*n2 using exact p-values");
  setting("--sample-size", "sample_size", "Authors drawn per resampling round");
  setting("--rounds", "rounds", "Resampling rounds");
  setting("--seed", "seed", "Resampling seed");
  setting("--min-df", "min_df", "Minimum document frequency for typical words");
  setting("--top-k", "top_k", "Typical words reported per category");
  setting("--clause-threshold", "clause_threshold", "Estimated clauses that make a sentence multi-clause");
  setting("--min-author-windows", "min_author_windows", "Windows an author needs to be sampled");
  setting("--min-category-docs", "min_category_docs", "Documents a category needs for the rank test");
  setting("-o,--output", "output", "Output directory");
  setting("-j,--threads", "threads", "Worker threads");
  app.add_option_function<std::vector<std::string>>(
      "--set",
      [&](const std::vector<std::string>& items) {
        for (const auto& item : items) {
          const auto eq = item.find('=');
          if (eq == std::string::npos) throw CLI::ValidationError("--set", "expected key=value");
          settings.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        }
      },
      "Set any config key: key=value");

  auto* ingest = app.add_subcommand("ingest", "Summarise document counts per label");
  auto* typical = app.add_subcommand("typical", "Typical words per category by chi-squared");
  auto* markers = app.add_subcommand("markers", "Marker rates and rank-test significance");
  auto* distributions = app.add_subcommand("distributions", "Transition-pattern distributions");
  auto* sweep = app.add_subcommand("sweep", "Genre vs author divergence across window sizes");
  auto* dump = app.add_subcommand("dump-lexicons", "Write the built-in word lists");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig config;
  try {
    if (config_path.empty()) {
      if (const char* env = std::getenv(kConfigEnvVar); env && *env) config_path = env;
    }
    if (!config_path.empty()) apply_config_file(config, config_path);
    for (const auto& [key, value] : settings) apply_setting(config, key, value);
    config.validate();

    if (ingest->parsed()) cmd_ingest(config, out, err);
    else if (typical->parsed()) cmd_typical(config, out, err);
    else if (markers->parsed()) cmd_markers(config, out, err);
    else if (distributions->parsed()) cmd_distributions(config, out, err);
    else if (sweep->parsed()) cmd_sweep(config, out, err);
    else if (dump->parsed()) cmd_dump_lexicons(config, out);
  } catch (const InputError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInput;
  } catch (const AnalysisError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitAnalysis;
  }
  return kExitOk;
}

}  // namespace stylo::cli
