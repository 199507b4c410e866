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

#ifndef LEXSUMM_SUMMARIZER_H_
#define LEXSUMM_SUMMARIZER_H_

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexsumm/graph_ranking.h"
#include "lexsumm/judgment_parser.h"
#include "lexsumm/sentence_graph.h"
#include "lexsumm/supervised_scorer.h"

namespace lexsumm {

// Concrete methods are ordered; the order breaks quality ties in SelectBest.
enum class SummaryMethod { kTextRank = 0, kLexRank, kSupervised, kAuto };

// "textrank", "lexrank", "supervised", "auto".
std::string_view SummaryMethodName(SummaryMethod method);
// Throws ValidationError on an unknown name.
SummaryMethod ParseSummaryMethod(std::string_view name);

struct QualityWeights {
  double coverage = 0.6;
  double non_redundancy = 0.3;
  double length_fit = 0.1;
};

struct SummaryConfig {
  double ratio = 0.3;
  size_t min_per_section = 1;
  double mmr_lambda = 0.7;
  bool include_introduction = false;
  QualityWeights quality;
  // Number of top document terms the coverage term checks.
  size_t coverage_terms = 20;
  RankingConfig ranking;

  static constexpr double kTextRankThreshold = 0.0;
  static constexpr double kLexRankThreshold = 0.1;

  // Throws ValidationError when any field is out of range.
  void Validate() const;
};

struct SectionSummary {
  SectionKind kind = SectionKind::kContent;
  // Verbatim sentences of the section in document order.
  std::vector<Sentence> bullets;
  size_t source_count = 0;

  bool operator==(const SectionSummary &) const = default;
};

struct CaseSummary {
  std::string case_id;
  SummaryMethod method = SummaryMethod::kTextRank;
  std::vector<SectionSummary> sections;
  std::string combined_text;
  double quality = 0.0;
  double ratio = 0.0;

  bool operator==(const CaseSummary &) const = default;
};

// Sections summarized under `cfg`, in document order.
std::vector<SectionKind> SummarizedSections(const SummaryConfig &cfg);

// min(n, max(min_per_section, ceil(ratio * n))), or 0 for an empty section.
size_t SectionBudget(size_t sentence_count, const SummaryConfig &cfg);
std::map<SectionKind, size_t> AllocateBudget(
    const std::map<SectionKind, size_t> &sentence_counts,
    const SummaryConfig &cfg);

// Per-sentence importance for one section. Implementations must return one
// score per sentence of the section.
class SentenceScorer {
 public:
  virtual ~SentenceScorer() = default;
  virtual std::vector<double> Score(
      const JudgmentSection &section,
      std::span<const TokenSequence> sentence_tokens) const = 0;
};

// Damped ranking over a per-section similarity graph.
class GraphScorer : public SentenceScorer {
 public:
  GraphScorer(SimilarityMethod similarity, double threshold,
              RankingConfig ranking);
  std::vector<double> Score(
      const JudgmentSection &section,
      std::span<const TokenSequence> sentence_tokens) const override;

 private:
  SimilarityMethod similarity_;
  double threshold_;
  RankingConfig ranking_;
};

// Probability from the linear sentence classifier.
class ModelScorer : public SentenceScorer {
 public:
  explicit ModelScorer(std::shared_ptr<const ScoringModel> model);
  std::vector<double> Score(
      const JudgmentSection &section,
      std::span<const TokenSequence> sentence_tokens) const override;

 private:
  std::shared_ptr<const ScoringModel> model_;
};

// Throws ConfigurationError for kSupervised without a model and
// ValidationError for kAuto.
std::unique_ptr<SentenceScorer> MakeScorer(
    SummaryMethod method, const SummaryConfig &cfg,
    std::shared_ptr<const ScoringModel> model);

// Similarity used for redundancy control by each concrete method.
SimilarityMethod RedundancySimilarity(SummaryMethod method);

std::vector<TokenSequence> SectionTokens(const JudgmentSection &section);

std::vector<double> ScoreSection(const JudgmentSection &section,
                                 SummaryMethod method, const SummaryConfig &cfg,
                                 std::shared_ptr<const ScoringModel> model);

// Greedy maximal marginal relevance. The first pick is the top score; each
// next pick maximizes lambda * score_i - (1 - lambda) * max_j sim(i, j) over
// already selected j. Ties go to the lower index. Returns sorted indices.
std::vector<size_t> SelectBullets(
    std::span<const double> scores, size_t k, double lambda,
    const std::vector<std::vector<double>> &similarity);

// "- " per bullet, one bullet per line, blank line between non-empty
// sections. Line breaks inside a bullet become spaces.
std::string RenderCombinedText(std::span<const SectionSummary> sections);

struct QualityBreakdown {
  double coverage = 0.0;
  double redundancy = 0.0;
  double length_fit = 0.0;
  double total = 0.0;
};

QualityBreakdown QualityComponents(const CaseSummary &summary,
                                   const ParsedJudgment &parsed,
                                   const SummaryConfig &cfg);
double QualityScore(const CaseSummary &summary, const ParsedJudgment &parsed,
                    const SummaryConfig &cfg);

// Highest quality wins; ties go to the method that comes first.
// Throws ValidationError for an empty candidate list.
CaseSummary SelectBest(std::span<const CaseSummary> candidates);

// Summarizes with an arbitrary scorer; `method` is recorded on the output.
CaseSummary SummarizeWithScorer(const ParsedJudgment &parsed,
                                const SentenceScorer &scorer,
                                SummaryMethod method, const SummaryConfig &cfg,
                                std::string case_id = {});

// kAuto builds TextRank, LexRank and (with a model) Supervised candidates and
// keeps the best by quality.
CaseSummary SummarizeDocument(const ParsedJudgment &parsed,
                              SummaryMethod method, const SummaryConfig &cfg,
                              std::shared_ptr<const ScoringModel> model,
                              std::string case_id = {});

}  // namespace lexsumm

#endif  // LEXSUMM_SUMMARIZER_H_
