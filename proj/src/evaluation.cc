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

#include "lexsumm/evaluation.h"

#include <algorithm>
#include <map>

#include "lexsumm/text_processing.h"

namespace lexsumm {
namespace {

using NGramCounts = std::map<std::vector<std::string>, size_t>;

NGramCounts CountNGrams(const TokenSequence &tokens, size_t n) {
  NGramCounts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return counts;
}

double Ratio(size_t num, size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

nlohmann::json ScoreJson(const RougeScore &s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

nlohmann::json MethodJson(const MethodScores &m) {
  return {{"rouge1", ScoreJson(m.rouge1)},
          {"rouge2", ScoreJson(m.rouge2)},
          {"rougeL", ScoreJson(m.rougeL)}};
}

RougeScore Accumulate(const RougeScore &sum, const RougeScore &s) {
  return {sum.precision + s.precision, sum.recall + s.recall, sum.f1 + s.f1};
}

RougeScore Divide(const RougeScore &s, double d) {
  return {s.precision / d, s.recall / d, s.f1 / d};
}

}  // namespace

RougeScore MakeRougeScore(double precision, double recall) {
  RougeScore score{precision, recall, 0.0};
  if (precision + recall > 0.0) {
    score.f1 = 2.0 * precision * recall / (precision + recall);
  }
  return score;
}

RougeScore RougeN(const TokenSequence &candidate, const TokenSequence &reference,
                  size_t n) {
  if (n == 0) return {};
  const NGramCounts cand = CountNGrams(candidate, n);
  const NGramCounts ref = CountNGrams(reference, n);
  size_t matches = 0;
  for (const auto &[gram, count] : cand) {
    const auto it = ref.find(gram);
    if (it != ref.end()) matches += std::min(count, it->second);
  }
  const size_t cand_total = candidate.size() >= n ? candidate.size() - n + 1 : 0;
  const size_t ref_total = reference.size() >= n ? reference.size() - n + 1 : 0;
  return MakeRougeScore(Ratio(matches, cand_total), Ratio(matches, ref_total));
}

size_t LongestCommonSubsequence(const TokenSequence &a, const TokenSequence &b) {
  std::vector<size_t> previous(b.size() + 1, 0);
  std::vector<size_t> current(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      current[j] = a[i - 1] == b[j - 1]
                       ? previous[j - 1] + 1
                       : std::max(previous[j], current[j - 1]);
    }
    std::swap(previous, current);
  }
  return previous[b.size()];
}

RougeScore RougeL(const TokenSequence &candidate,
                  const TokenSequence &reference) {
  const size_t lcs = LongestCommonSubsequence(candidate, reference);
  return MakeRougeScore(Ratio(lcs, candidate.size()),
                        Ratio(lcs, reference.size()));
}

EvalReport EvaluateCorpus(std::span<const EvalCase> cases,
                          std::span<const SummaryMethod> methods,
                          const SummaryConfig &cfg,
                          std::shared_ptr<const ScoringModel> model) {
  EvalReport report;
  std::map<std::string, MethodScores> sums;
  size_t evaluated = 0;
  for (const EvalCase &c : cases) {
    if (!c.gold_summary) {
      ++report.skipped_without_gold;
      continue;
    }
    ++evaluated;
    const TokenSequence reference = Tokenize(*c.gold_summary);
    auto &row = report.cases[c.case_id];
    for (SummaryMethod method : methods) {
      const CaseSummary summary =
          SummarizeDocument(c.parsed, method, cfg, model, c.case_id);
      const TokenSequence candidate = Tokenize(summary.combined_text);
      MethodScores scores{RougeN(candidate, reference, 1),
                          RougeN(candidate, reference, 2),
                          RougeL(candidate, reference)};
      const std::string name(SummaryMethodName(method));
      row[name] = scores;
      MethodScores &sum = sums[name];
      sum.rouge1 = Accumulate(sum.rouge1, scores.rouge1);
      sum.rouge2 = Accumulate(sum.rouge2, scores.rouge2);
      sum.rougeL = Accumulate(sum.rougeL, scores.rougeL);
    }
  }
  if (evaluated > 0) {
    const double d = static_cast<double>(evaluated);
    for (const auto &[name, sum] : sums) {
      report.means[name] = {Divide(sum.rouge1, d), Divide(sum.rouge2, d),
                            Divide(sum.rougeL, d)};
    }
  }
  return report;
}

nlohmann::json EvalReportToJson(const EvalReport &report) {
  nlohmann::json cases = nlohmann::json::object();
  for (const auto &[id, methods] : report.cases) {
    nlohmann::json row = nlohmann::json::object();
    for (const auto &[name, scores] : methods) row[name] = MethodJson(scores);
    cases[id] = std::move(row);
  }
  nlohmann::json means = nlohmann::json::object();
  for (const auto &[name, scores] : report.means) means[name] = MethodJson(scores);
  return {{"cases", std::move(cases)},
          {"means", std::move(means)},
          {"skipped_without_gold", report.skipped_without_gold}};
}

}  // namespace lexsumm
