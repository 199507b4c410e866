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

#include "lexsumm/supervised_scorer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lexsumm/error.h"
#include "lexsumm/text_processing.h"

namespace lexsumm {
namespace {

using nlohmann::json;

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double Softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

double Logit(const ScoringModel &model, const FeatureVector &x) {
  double z = model.bias;
  for (size_t f = 0; f < kFeatureCount; ++f) z += model.weights[f] * x[f];
  return z;
}

bool ContainsPhrase(const TokenSequence &tokens, const TokenSequence &phrase) {
  if (phrase.empty() || phrase.size() > tokens.size()) return false;
  return std::search(tokens.begin(), tokens.end(), phrase.begin(),
                     phrase.end()) != tokens.end();
}

double Jaccard(const TokenSequence &a, const TokenSequence &b) {
  const std::set<std::string> sa(a.begin(), a.end());
  const std::set<std::string> sb(b.begin(), b.end());
  if (sa.empty() && sb.empty()) return 0.0;
  size_t common = 0;
  for (const auto &token : sa) common += sb.count(token);
  return static_cast<double>(common) /
         static_cast<double>(sa.size() + sb.size() - common);
}

void ValidateData(std::span<const TrainingExample> data) {
  if (data.empty()) throw ValidationError("training data is empty");
  for (size_t i = 0; i < data.size(); ++i) {
    if (data[i].label != 0 && data[i].label != 1) {
      throw ValidationError("training example " + std::to_string(i) +
                            ": label must be 0 or 1");
    }
    for (double value : data[i].features) {
      if (!std::isfinite(value)) {
        throw ValidationError("training example " + std::to_string(i) +
                              ": non-finite feature");
      }
    }
  }
}

template <typename T>
T Field(const json &object, const char *name, std::string_view where) {
  if (!object.is_object() || !object.contains(name)) {
    throw DecodeError(std::string(where) + ": missing field \"" + name + "\"");
  }
  try {
    return object.at(name).get<T>();
  } catch (const json::exception &e) {
    throw DecodeError(std::string(where) + ": field \"" + name +
                      "\" has the wrong type");
  }
}

}  // namespace

FeatureConfig FeatureConfig::Default() {
  FeatureConfig config;
  config.cue_phrases = {"tuyên bố",    "chấp nhận",    "buộc",
                        "xử phạt",     "có nghĩa vụ",  "bác yêu cầu",
                        "kháng cáo",   "án phí",       "hội đồng xét xử",
                        "căn cứ"};
  return config;
}

SectionContext::SectionContext(std::span<const TokenSequence> tokens,
                               TokenSequence heading)
    : sentence_tokens(tokens),
      heading_tokens(std::move(heading)),
      tfisf(TfIdfVectors(tokens)) {}

FeatureVector ExtractFeatures(size_t sentence_index,
                              const SectionContext &context,
                              std::span<const std::string> cue_phrases) {
  const auto &all = context.sentence_tokens;
  if (sentence_index >= all.size()) {
    throw ValidationError("sentence index outside its section");
  }
  const TokenSequence &tokens = all[sentence_index];
  FeatureVector x{};

  const size_t n = all.size();
  x[0] = n > 1 ? static_cast<double>(sentence_index) /
                     static_cast<double>(n - 1)
               : 0.0;

  size_t longest = 0;
  for (const auto &sentence : all) longest = std::max(longest, sentence.size());
  x[1] = longest > 0 ? static_cast<double>(tokens.size()) /
                           static_cast<double>(longest)
                     : 0.0;

  const TfIdfVector &vector = context.tfisf.at(sentence_index);
  if (!vector.empty()) {
    double sum = 0.0;
    for (const auto &[token, weight] : vector.terms) sum += weight;
    x[2] = sum / static_cast<double>(vector.terms.size());
  }

  x[3] = context.heading_tokens.empty()
             ? 0.0
             : Jaccard(tokens, context.heading_tokens);

  for (const std::string &phrase : cue_phrases) {
    if (ContainsPhrase(tokens, Tokenize(phrase))) {
      x[4] = 1.0;
      break;
    }
  }

  if (!tokens.empty()) {
    const auto numeric =
        std::count_if(tokens.begin(), tokens.end(),
                      [](const std::string &t) { return IsNumericToken(t); });
    x[5] = static_cast<double>(numeric) / static_cast<double>(tokens.size());
  }
  return x;
}

std::vector<FeatureVector> ExtractSectionFeatures(
    const SectionContext &context, std::span<const std::string> cue_phrases) {
  std::vector<FeatureVector> features;
  features.reserve(context.sentence_tokens.size());
  for (size_t i = 0; i < context.sentence_tokens.size(); ++i) {
    features.push_back(ExtractFeatures(i, context, cue_phrases));
  }
  return features;
}

double Predict(const ScoringModel &model, const FeatureVector &x) {
  if (model.feature_config.version != kFeatureVersion) {
    throw ConfigurationError("model feature version \"" +
                             model.feature_config.version +
                             "\" does not match \"" +
                             std::string(kFeatureVersion) + "\"");
  }
  return Sigmoid(Logit(model, x));
}

double TrainingLoss(const ScoringModel &model,
                    std::span<const TrainingExample> data, double l2) {
  if (data.empty()) return 0.0;
  double loss = 0.0;
  for (const TrainingExample &example : data) {
    const double z = Logit(model, example.features);
    loss += Softplus(z) - static_cast<double>(example.label) * z;
  }
  loss /= static_cast<double>(data.size());
  double norm = 0.0;
  for (double w : model.weights) norm += w * w;
  return loss + 0.5 * l2 * norm;
}

ModelGradient TrainingGradient(const ScoringModel &model,
                               std::span<const TrainingExample> data,
                               double l2) {
  ModelGradient gradient;
  if (data.empty()) return gradient;
  for (const TrainingExample &example : data) {
    const double error =
        Sigmoid(Logit(model, example.features)) - example.label;
    for (size_t f = 0; f < kFeatureCount; ++f) {
      gradient.weights[f] += error * example.features[f];
    }
    gradient.bias += error;
  }
  const double m = static_cast<double>(data.size());
  for (size_t f = 0; f < kFeatureCount; ++f) {
    gradient.weights[f] = gradient.weights[f] / m + l2 * model.weights[f];
  }
  gradient.bias /= m;
  return gradient;
}

ScoringModel Train(std::span<const TrainingExample> data,
                   const TrainingOptions &options,
                   std::vector<double> *loss_trace,
                   FeatureConfig feature_config) {
  ValidateData(data);
  if (!(options.learning_rate > 0.0) || !(options.l2 >= 0.0)) {
    throw ValidationError("learning rate must be > 0 and l2 >= 0");
  }
  std::vector<TrainingExample> ordered(data.begin(), data.end());
  std::sort(ordered.begin(), ordered.end());

  ScoringModel model;
  model.feature_config = std::move(feature_config);
  if (loss_trace) {
    loss_trace->clear();
    loss_trace->push_back(TrainingLoss(model, ordered, options.l2));
  }
  for (size_t epoch = 0; epoch < options.epochs; ++epoch) {
    const ModelGradient g = TrainingGradient(model, ordered, options.l2);
    for (size_t f = 0; f < kFeatureCount; ++f) {
      model.weights[f] -= options.learning_rate * g.weights[f];
    }
    model.bias -= options.learning_rate * g.bias;
    if (loss_trace) {
      loss_trace->push_back(TrainingLoss(model, ordered, options.l2));
    }
  }
  return model;
}

double TrainingAccuracy(const ScoringModel &model,
                        std::span<const TrainingExample> data) {
  if (data.empty()) return 0.0;
  size_t correct = 0;
  for (const TrainingExample &example : data) {
    const int predicted = Predict(model, example.features) >= 0.5 ? 1 : 0;
    correct += predicted == example.label;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

std::string SerializeModel(const ScoringModel &model) {
  json doc;
  doc["version"] = model.feature_config.version;
  doc["weights"] = model.weights;
  doc["bias"] = model.bias;
  doc["cue_phrases"] = model.feature_config.cue_phrases;
  return doc.dump(2) + "\n";
}

ScoringModel DeserializeModel(std::string_view contents) {
  json doc;
  try {
    doc = json::parse(contents);
  } catch (const json::parse_error &e) {
    throw DecodeError("model file: parse error at byte " +
                      std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw DecodeError("model file: expected an object");
  ScoringModel model;
  model.feature_config.version = Field<std::string>(doc, "version", "model file");
  const auto weights = Field<std::vector<double>>(doc, "weights", "model file");
  if (weights.size() != kFeatureCount) {
    throw DecodeError("model file: \"weights\" must hold " +
                      std::to_string(kFeatureCount) + " numbers");
  }
  std::copy(weights.begin(), weights.end(), model.weights.begin());
  model.bias = Field<double>(doc, "bias", "model file");
  model.feature_config.cue_phrases =
      Field<std::vector<std::string>>(doc, "cue_phrases", "model file");
  for (double w : model.weights) {
    if (!std::isfinite(w)) throw DecodeError("model file: non-finite weight");
  }
  if (!std::isfinite(model.bias)) {
    throw DecodeError("model file: non-finite bias");
  }
  return model;
}

void SaveModel(const ScoringModel &model, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StorageError("cannot write model file " + path.string());
  out << SerializeModel(model);
  if (!out) throw StorageError("failed writing model file " + path.string());
}

ScoringModel LoadModel(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("cannot read model file " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return DeserializeModel(contents.str());
}

std::vector<LabeledSentence> ParseLabels(std::string_view jsonl) {
  std::vector<LabeledSentence> labels;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "label line " + std::to_string(line_number);
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::parse_error &e) {
      throw DecodeError(where + ": parse error at byte " +
                        std::to_string(e.byte));
    }
    LabeledSentence label;
    label.case_id = Field<std::string>(doc, "case_id", where);
    try {
      label.section = ParseSectionKind(Field<std::string>(doc, "section", where));
    } catch (const ValidationError &e) {
      throw DecodeError(where + ": " + e.what());
    }
    label.sentence_index = Field<size_t>(doc, "sentence_index", where);
    label.label = Field<int>(doc, "label", where);
    if (label.label != 0 && label.label != 1) {
      throw DecodeError(where + ": label must be 0 or 1");
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

std::vector<LabeledSentence> LoadLabels(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("cannot read label file " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return ParseLabels(contents.str());
}

std::string SerializeLabel(const LabeledSentence &label) {
  json doc;
  doc["case_id"] = label.case_id;
  doc["section"] = SectionKindName(label.section);
  doc["sentence_index"] = label.sentence_index;
  doc["label"] = label.label;
  return doc.dump();
}

}  // namespace lexsumm
