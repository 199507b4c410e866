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

#ifndef LEXSUMM_EVALUATION_H_
#define LEXSUMM_EVALUATION_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexsumm/judgment_parser.h"
#include "lexsumm/sentence_graph.h"
#include "lexsumm/summarizer.h"
#include "json.hpp"

namespace lexsumm {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const RougeScore &) const = default;
};

// F1 from precision and recall, 0 when both are 0.
RougeScore MakeRougeScore(double precision, double recall);

// Clipped n-gram overlap. Zero totals give zero scores.
RougeScore RougeN(const TokenSequence &candidate, const TokenSequence &reference,
                  size_t n);
// Token-level longest common subsequence.
size_t LongestCommonSubsequence(const TokenSequence &a, const TokenSequence &b);
RougeScore RougeL(const TokenSequence &candidate,
                  const TokenSequence &reference);

struct MethodScores {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougeL;

  bool operator==(const MethodScores &) const = default;
};

struct EvalCase {
  std::string case_id;
  ParsedJudgment parsed;
  std::optional<std::string> gold_summary;
};

struct EvalReport {
  // case id -> method name -> scores
  std::map<std::string, std::map<std::string, MethodScores>> cases;
  // method name -> arithmetic mean over evaluated cases
  std::map<std::string, MethodScores> means;
  size_t skipped_without_gold = 0;

  bool operator==(const EvalReport &) const = default;
};

// Summarizes every case that has a gold summary with every method and
// scores combined_text against the gold text.
EvalReport EvaluateCorpus(std::span<const EvalCase> cases,
                          std::span<const SummaryMethod> methods,
                          const SummaryConfig &cfg,
                          std::shared_ptr<const ScoringModel> model);

nlohmann::json EvalReportToJson(const EvalReport &report);

}  // namespace lexsumm

#endif  // LEXSUMM_EVALUATION_H_
