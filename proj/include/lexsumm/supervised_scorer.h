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

#ifndef LEXSUMM_SUPERVISED_SCORER_H_
#define LEXSUMM_SUPERVISED_SCORER_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexsumm/judgment_parser.h"
#include "lexsumm/sentence_graph.h"

namespace lexsumm {

inline constexpr size_t kFeatureCount = 6;
inline constexpr std::string_view kFeatureVersion = "lexsumm-features-v1";

// [relative position, relative length, mean tf-isf, heading Jaccard,
//  cue phrase indicator, numeral density]
using FeatureVector = std::array<double, kFeatureCount>;

struct FeatureConfig {
  std::vector<std::string> cue_phrases;
  std::string version{kFeatureVersion};

  static FeatureConfig Default();
  bool operator==(const FeatureConfig &) const = default;
};

struct ScoringModel {
  std::array<double, kFeatureCount> weights{};
  double bias = 0.0;
  FeatureConfig feature_config = FeatureConfig::Default();

  bool operator==(const ScoringModel &) const = default;
};

// Everything about a section that per-sentence features depend on.
struct SectionContext {
  std::span<const TokenSequence> sentence_tokens;
  TokenSequence heading_tokens;
  std::vector<TfIdfVector> tfisf;

  SectionContext(std::span<const TokenSequence> tokens, TokenSequence heading);
};

FeatureVector ExtractFeatures(size_t sentence_index,
                              const SectionContext &context,
                              std::span<const std::string> cue_phrases);

std::vector<FeatureVector> ExtractSectionFeatures(
    const SectionContext &context, std::span<const std::string> cue_phrases);

// sigmoid(w . x + b). Throws ConfigurationError when the model was built for
// a different feature version.
double Predict(const ScoringModel &model, const FeatureVector &x);

struct TrainingExample {
  FeatureVector features{};
  int label = 0;

  auto operator<=>(const TrainingExample &) const = default;
};

struct TrainingOptions {
  double learning_rate = 0.1;
  double l2 = 1e-3;
  size_t epochs = 500;
};

// Mean logistic loss plus (l2 / 2) * |w|^2; the bias is not regularized.
double TrainingLoss(const ScoringModel &model,
                    std::span<const TrainingExample> data, double l2);

struct ModelGradient {
  std::array<double, kFeatureCount> weights{};
  double bias = 0.0;
};

// (1/m) X^T (sigmoid(Xw + b) - y) + l2 * w, and the bias component.
ModelGradient TrainingGradient(const ScoringModel &model,
                               std::span<const TrainingExample> data,
                               double l2);

// Full-batch gradient descent from zero weights for exactly `epochs` steps.
// Examples are put in canonical order first, so any permutation of `data`
// gives a bit-identical model. `loss_trace`, when given, receives the loss
// before the first step and after every step.
ScoringModel Train(std::span<const TrainingExample> data,
                   const TrainingOptions &options,
                   std::vector<double> *loss_trace = nullptr,
                   FeatureConfig feature_config = FeatureConfig::Default());

double TrainingAccuracy(const ScoringModel &model,
                        std::span<const TrainingExample> data);

std::string SerializeModel(const ScoringModel &model);
// Throws DecodeError with the byte offset or field at fault.
ScoringModel DeserializeModel(std::string_view contents);

void SaveModel(const ScoringModel &model, const std::filesystem::path &path);
ScoringModel LoadModel(const std::filesystem::path &path);

// One line of a label file: {"case_id", "section", "sentence_index", "label"}.
struct LabeledSentence {
  std::string case_id;
  SectionKind section = SectionKind::kContent;
  size_t sentence_index = 0;
  int label = 0;

  bool operator==(const LabeledSentence &) const = default;
};

std::vector<LabeledSentence> ParseLabels(std::string_view jsonl);
std::vector<LabeledSentence> LoadLabels(const std::filesystem::path &path);
std::string SerializeLabel(const LabeledSentence &label);

}  // namespace lexsumm

#endif  // LEXSUMM_SUPERVISED_SCORER_H_
