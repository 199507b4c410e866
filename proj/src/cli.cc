// Copyright 2026 The LexSumm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexsumm/cli.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexsumm/api_server.h"
#include "lexsumm/corpus_store.h"
#include "lexsumm/error.h"
#include "lexsumm/evaluation.h"
#include "lexsumm/pipeline.h"
#include "lexsumm/supervised_scorer.h"
#include "lexsumm/wire_format.h"

namespace lexsumm {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char *kDefaultStore = "lexsumm-store";

std::string ReadText(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

std::string DefaultStoreDir() {
  const char *env = std::getenv("LEXSUMM_STORE");
  return env && *env ? env : kDefaultStore;
}

struct CommonOptions {
  std::string store = DefaultStoreDir();
  std::string abbreviations;
  std::string headings;

  ParserResources Resources() const {
    ParserResources resources;
    if (!abbreviations.empty()) {
      resources.abbreviations = AbbreviationTable::Load(abbreviations);
    }
    if (!headings.empty()) resources.headings = HeadingPatternTable::Load(headings);
    return resources;
  }
};

std::shared_ptr<const ScoringModel> MaybeLoadModel(const std::string &path) {
  if (path.empty()) return nullptr;
  return std::make_shared<const ScoringModel>(LoadModel(path));
}

// --meta accepts inline JSON or a path to a JSON file.
json ParseMetaArgument(const std::string &meta) {
  if (meta.empty()) return json::object();
  const std::string text =
      meta.find_first_not_of(" \t\n") != std::string::npos &&
              meta[meta.find_first_not_of(" \t\n")] == '{'
          ? meta
          : ReadText(meta);
  try {
    json parsed = json::parse(text);
    if (!parsed.is_object()) throw ValidationError("--meta must be an object");
    return parsed;
  } catch (const json::parse_error &e) {
    throw ValidationError("--meta: malformed JSON at byte " +
                          std::to_string(e.byte));
  }
}

bool IsGoldFile(const fs::path &path) {
  const std::string name = path.filename().string();
  return name.size() > 9 && name.ends_with(".gold.txt");
}

fs::path Sidecar(const fs::path &text_file, const std::string &suffix) {
  return text_file.parent_path() / (text_file.stem().string() + suffix);
}

int RunIngest(const CommonOptions &common, const std::string &input,
              const std::string &meta) {
  const json base = ParseMetaArgument(meta);
  std::vector<fs::path> files;
  if (fs::is_directory(input)) {
    for (const auto &entry : fs::directory_iterator(input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt" &&
          !IsGoldFile(entry.path())) {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(input)) {
    files.emplace_back(input);
  } else {
    throw ValidationError("no such file or directory: " + input);
  }

  CorpusStore store(common.store);
  for (const fs::path &file : files) {
    json metadata = base;
    if (const fs::path sidecar = Sidecar(file, ".meta.json"); fs::exists(sidecar)) {
      metadata.update(json::parse(ReadText(sidecar)));
    }
    if (!metadata.contains("title")) metadata["title"] = file.stem().string();
    CaseMetadata parsed;
    try {
      parsed = MetadataFromJson(metadata);
    } catch (const ValidationError &e) {
      throw ValidationError(file.string() + ": " + e.what());
    }
    const std::string id = store.Ingest(ReadText(file), parsed);
    if (const fs::path gold = Sidecar(file, ".gold.txt"); fs::exists(gold)) {
      store.PutGoldSummary(id, ReadText(gold));
    }
    std::cout << id << "\n";
  }
  return 0;
}

int RunSummarize(const CommonOptions &common, const std::string &target,
                 const std::string &method_name, std::optional<double> ratio,
                 bool include_introduction, bool as_json,
                 const std::string &model_path) {
  SummarizeRequest request;
  request.method = ParseSummaryMethod(method_name);
  request.ratio = ratio;
  if (include_introduction) request.include_introduction = true;
  if (ratio && !(*ratio > 0.0 && *ratio <= 1.0)) {
    throw ValidationError("--ratio must lie in (0, 1]");
  }
  const SummaryConfig cfg = ApplyRequest(SummaryConfig{}, request);
  const auto model = MaybeLoadModel(model_path);
  const ParserResources resources = common.Resources();

  std::string raw_text;
  if (fs::is_regular_file(target)) {
    raw_text = ReadText(target);
  } else if (IsValidCaseId(target)) {
    raw_text = CorpusStore(common.store).Get(target).raw_text;
  } else {
    throw ValidationError("\"" + target + "\" is neither a file nor a case id");
  }
  const CaseSummary summary =
      SummarizeText(raw_text, request.method, cfg, model, resources);
  if (as_json) {
    std::cout << SummaryToJson(summary, cfg).dump(2) << "\n";
  } else {
    std::cout << summary.combined_text << "\n";
  }
  return 0;
}

int RunTrain(const CommonOptions &common, const std::string &data_path,
             const std::string &corpus, const std::string &out,
             const TrainingOptions &options) {
  const std::vector<LabeledSentence> labels = LoadLabels(data_path);
  const CorpusStore store(corpus);
  const ParserResources resources = common.Resources();
  const FeatureConfig features = FeatureConfig::Default();

  struct SectionCache {
    std::vector<TokenSequence> tokens;
    std::vector<FeatureVector> features;
  };
  std::map<std::pair<std::string, SectionKind>, SectionCache> cache;
  std::map<std::string, ParsedJudgment> parsed;

  std::vector<TrainingExample> examples;
  examples.reserve(labels.size());
  for (const LabeledSentence &label : labels) {
    auto doc = parsed.find(label.case_id);
    if (doc == parsed.end()) {
      doc = parsed
                .emplace(label.case_id,
                         ParseText(store.Get(label.case_id).raw_text, resources))
                .first;
    }
    const auto key = std::make_pair(label.case_id, label.section);
    auto section_cache = cache.find(key);
    if (section_cache == cache.end()) {
      const JudgmentSection &section = doc->second.section(label.section);
      SectionCache entry;
      entry.tokens = SectionTokens(section);
      const SectionContext context(entry.tokens,
                                   Tokenize(section.heading_line.value_or("")));
      entry.features = ExtractSectionFeatures(context, features.cue_phrases);
      section_cache = cache.emplace(key, std::move(entry)).first;
    }
    const auto &section_features = section_cache->second.features;
    if (label.sentence_index >= section_features.size()) {
      throw ValidationError("label for case " + label.case_id + " section " +
                            std::string(SectionKindName(label.section)) +
                            " points at missing sentence " +
                            std::to_string(label.sentence_index));
    }
    examples.push_back({section_features[label.sentence_index], label.label});
  }

  std::vector<double> losses;
  const ScoringModel model = Train(examples, options, &losses, features);
  SaveModel(model, out);
  std::cout << std::setprecision(6) << "examples: " << examples.size() << "\n"
            << "final_loss: " << losses.back() << "\n"
            << "train_accuracy: " << TrainingAccuracy(model, examples) << "\n";
  return 0;
}

int RunEvaluate(const CommonOptions &common, const std::string &corpus,
                const std::vector<std::string> &method_names,
                const std::string &out, const std::string &model_path) {
  std::vector<SummaryMethod> methods;
  for (const std::string &name : method_names) {
    methods.push_back(ParseSummaryMethod(name));
  }
  const auto model = MaybeLoadModel(model_path);
  const CorpusStore store(corpus);
  const ParserResources resources = common.Resources();
  std::vector<EvalCase> cases;
  for (const std::string &id : store.Ids()) {
    cases.push_back({id, ParseText(store.Get(id).raw_text, resources),
                     store.GoldSummary(id)});
  }
  const EvalReport report =
      EvaluateCorpus(cases, methods, SummaryConfig{}, model);
  const json doc = EvalReportToJson(report);
  if (!out.empty()) {
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file) throw StorageError("cannot write " + out);
    file << doc.dump(2) << "\n";
  }
  std::cout << "evaluated: " << report.cases.size()
            << "  skipped (no gold): " << report.skipped_without_gold << "\n";
  std::cout << std::fixed << std::setprecision(4);
  for (const auto &[name, scores] : report.means) {
    std::cout << std::left << std::setw(12) << name
              << " R1-F " << scores.rouge1.f1 << "  R2-F " << scores.rouge2.f1
              << "  RL-F " << scores.rougeL.f1 << "\n";
  }
  return 0;
}

int RunServe(const CommonOptions &common, const std::string &addr,
             const std::string &model_path,
             const std::vector<std::string> &cors) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) {
    throw ValidationError("--addr must be host:port");
  }
  const std::string host = addr.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(addr.substr(colon + 1));
  } catch (const std::exception &) {
    throw ValidationError("--addr has an invalid port");
  }
  CorpusStore store(common.store);
  ServerOptions options;
  options.parser = common.Resources();
  if (!cors.empty()) options.cors_origins = cors;
  ApiServer server(store, MaybeLoadModel(model_path), std::move(options));
  std::cerr << "serving " << store.size() << " cases on http://" << addr << "\n";
  if (!server.Listen(host, port)) {
    throw StorageError("cannot listen on " + addr);
  }
  return 0;
}

}  // namespace

int RunCli(int argc, char **argv) {
  CLI::App app{"Extractive summarization of court judgments"};
  app.require_subcommand(1);
  CommonOptions common;
  app.add_option("--store", common.store,
                 "Case store directory (default $LEXSUMM_STORE or ./lexsumm-store)");
  app.add_option("--abbreviations", common.abbreviations, "Abbreviation table file");
  app.add_option("--headings", common.headings, "Heading pattern file");

  std::string input;
  std::string meta;
  auto *ingest = app.add_subcommand("ingest", "Add judgment text files to the store");
  ingest->add_option("path", input, "File or directory of .txt files")->required();
  ingest->add_option("--meta", meta, "Metadata JSON (inline or file path)");

  std::string target;
  std::string method = "auto";
  std::optional<double> ratio;
  bool as_json = false;
  bool include_introduction = false;
  std::string model_path;
  auto *summarize = app.add_subcommand("summarize", "Summarize a case or a text file");
  summarize->add_option("target", target, "Case id or judgment text file")->required();
  summarize->add_option("--method", method, "auto|textrank|lexrank|supervised");
  summarize->add_option("--ratio", ratio, "Fraction of sentences kept per section");
  summarize->add_flag("--include-introduction", include_introduction);
  summarize->add_flag("--json", as_json, "Print the full JSON response");
  summarize->add_option("--model", model_path, "Scoring model file");

  std::string data_path;
  std::string corpus;
  std::string out;
  TrainingOptions training;
  auto *train = app.add_subcommand("train", "Train the supervised sentence scorer");
  train->add_option("--data", data_path, "Labeled sentences (JSON lines)")->required();
  train->add_option("--corpus", corpus, "Store directory the labels refer to")->required();
  train->add_option("--out", out, "Model file to write")->required();
  train->add_option("--epochs", training.epochs);
  train->add_option("--lr", training.learning_rate);
  train->add_option("--l2", training.l2);

  std::vector<std::string> methods;
  std::string eval_model;
  std::string report_path;
  std::string eval_corpus;
  auto *evaluate = app.add_subcommand("evaluate", "ROUGE against gold summaries");
  evaluate->add_option("--corpus", eval_corpus, "Store directory")->required();
  evaluate->add_option("--methods", methods, "Comma-separated methods")
      ->delimiter(',')
      ->required();
  evaluate->add_option("--out", report_path, "JSON report file");
  evaluate->add_option("--model", eval_model, "Scoring model file");

  std::string addr = "127.0.0.1:8080";
  std::string serve_model;
  std::vector<std::string> cors;
  auto *serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--addr", addr, "host:port");
  serve->add_option("--model", serve_model, "Scoring model file");
  serve->add_option("--cors", cors, "Allowed CORS origins")->delimiter(',');
  // Subcommand-local --store for convenience.
  serve->add_option("--store", common.store, "Case store directory");
  ingest->add_option("--store", common.store, "Case store directory");
  summarize->add_option("--store", common.store, "Case store directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    if (*ingest) return RunIngest(common, input, meta);
    if (*summarize) {
      return RunSummarize(common, target, method, ratio, include_introduction,
                          as_json, model_path);
    }
    if (*train) return RunTrain(common, data_path, corpus, out, training);
    if (*evaluate) {
      return RunEvaluate(common, eval_corpus, methods, report_path, eval_model);
    }
    if (*serve) return RunServe(common, addr, serve_model, cors);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace lexsumm
