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

#include "lexsumm/summarizer.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "lexsumm/error.h"
#include "lexsumm/text_processing.h"

namespace lexsumm {

std::string_view SummaryMethodName(SummaryMethod method) {
  switch (method) {
    case SummaryMethod::kTextRank:
      return "textrank";
    case SummaryMethod::kLexRank:
      return "lexrank";
    case SummaryMethod::kSupervised:
      return "supervised";
    case SummaryMethod::kAuto:
      return "auto";
  }
  return "unknown";
}

SummaryMethod ParseSummaryMethod(std::string_view name) {
  for (SummaryMethod method :
       {SummaryMethod::kTextRank, SummaryMethod::kLexRank,
        SummaryMethod::kSupervised, SummaryMethod::kAuto}) {
    if (SummaryMethodName(method) == name) return method;
  }
  throw ValidationError("unknown summarization method \"" + std::string(name) +
                        "\"");
}

void SummaryConfig::Validate() const {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw ValidationError("ratio must lie in (0, 1]");
  }
  if (!(mmr_lambda >= 0.0 && mmr_lambda <= 1.0)) {
    throw ValidationError("MMR lambda must lie in [0, 1]");
  }
  const QualityWeights &q = quality;
  if (!(q.coverage >= 0.0 && q.non_redundancy >= 0.0 && q.length_fit >= 0.0) ||
      std::abs(q.coverage + q.non_redundancy + q.length_fit - 1.0) > 1e-9) {
    throw ValidationError("quality weights must be non-negative and sum to 1");
  }
  ranking.Validate();
}

std::vector<SectionKind> SummarizedSections(const SummaryConfig &cfg) {
  std::vector<SectionKind> kinds;
  if (cfg.include_introduction) kinds.push_back(SectionKind::kIntroduction);
  kinds.insert(kinds.end(), {SectionKind::kContent, SectionKind::kAssessment,
                             SectionKind::kDecision});
  return kinds;
}

size_t SectionBudget(size_t sentence_count, const SummaryConfig &cfg) {
  if (sentence_count == 0) return 0;
  // The slack keeps products like 0.1 * 30 from rounding up a whole sentence.
  const double target =
      std::ceil(cfg.ratio * static_cast<double>(sentence_count) - 1e-9);
  const size_t wanted =
      std::max(cfg.min_per_section, static_cast<size_t>(std::max(target, 0.0)));
  return std::min(sentence_count, wanted);
}

std::map<SectionKind, size_t> AllocateBudget(
    const std::map<SectionKind, size_t> &sentence_counts,
    const SummaryConfig &cfg) {
  std::map<SectionKind, size_t> budget;
  for (const auto &[kind, count] : sentence_counts) {
    budget[kind] = SectionBudget(count, cfg);
  }
  return budget;
}

GraphScorer::GraphScorer(SimilarityMethod similarity, double threshold,
                         RankingConfig ranking)
    : similarity_(similarity), threshold_(threshold), ranking_(ranking) {}

std::vector<double> GraphScorer::Score(
    const JudgmentSection &section,
    std::span<const TokenSequence> sentence_tokens) const {
  (void)section;
  const SimilarityGraph graph =
      BuildSimilarityGraph(sentence_tokens, similarity_, threshold_);
  return PowerIterate(graph, ranking_).scores;
}

ModelScorer::ModelScorer(std::shared_ptr<const ScoringModel> model)
    : model_(std::move(model)) {
  if (!model_) throw ConfigurationError("supervised scoring needs a model");
}

std::vector<double> ModelScorer::Score(
    const JudgmentSection &section,
    std::span<const TokenSequence> sentence_tokens) const {
  const SectionContext context(sentence_tokens,
                               Tokenize(section.heading_line.value_or("")));
  std::vector<double> scores;
  scores.reserve(sentence_tokens.size());
  for (const FeatureVector &x :
       ExtractSectionFeatures(context, model_->feature_config.cue_phrases)) {
    scores.push_back(Predict(*model_, x));
  }
  return scores;
}

std::unique_ptr<SentenceScorer> MakeScorer(
    SummaryMethod method, const SummaryConfig &cfg,
    std::shared_ptr<const ScoringModel> model) {
  switch (method) {
    case SummaryMethod::kTextRank:
      return std::make_unique<GraphScorer>(SimilarityMethod::kOverlap,
                                           SummaryConfig::kTextRankThreshold,
                                           cfg.ranking);
    case SummaryMethod::kLexRank:
      return std::make_unique<GraphScorer>(SimilarityMethod::kTfIdfCosine,
                                           SummaryConfig::kLexRankThreshold,
                                           cfg.ranking);
    case SummaryMethod::kSupervised:
      if (!model) {
        throw ConfigurationError(
            "the supervised method requires a loaded scoring model");
      }
      return std::make_unique<ModelScorer>(std::move(model));
    case SummaryMethod::kAuto:
      break;
  }
  throw ValidationError("auto does not name a single scorer");
}

SimilarityMethod RedundancySimilarity(SummaryMethod method) {
  return method == SummaryMethod::kTextRank ? SimilarityMethod::kOverlap
                                            : SimilarityMethod::kTfIdfCosine;
}

std::vector<TokenSequence> SectionTokens(const JudgmentSection &section) {
  std::vector<TokenSequence> tokens;
  tokens.reserve(section.sentences.size());
  for (const Sentence &sentence : section.sentences) {
    tokens.push_back(Tokenize(sentence.text));
  }
  return tokens;
}

std::vector<double> ScoreSection(const JudgmentSection &section,
                                 SummaryMethod method, const SummaryConfig &cfg,
                                 std::shared_ptr<const ScoringModel> model) {
  const auto scorer = MakeScorer(method, cfg, std::move(model));
  return scorer->Score(section, SectionTokens(section));
}

std::vector<size_t> SelectBullets(
    std::span<const double> scores, size_t k, double lambda,
    const std::vector<std::vector<double>> &similarity) {
  const size_t n = scores.size();
  if (k > n) throw ValidationError("cannot select more bullets than sentences");
  std::vector<size_t> selected;
  std::vector<bool> taken(n, false);
  while (selected.size() < k) {
    size_t best = n;
    double best_value = 0.0;
    for (size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      double value = scores[i];
      if (!selected.empty()) {
        double max_sim = 0.0;
        for (size_t j : selected) max_sim = std::max(max_sim, similarity[i][j]);
        value = lambda * scores[i] - (1.0 - lambda) * max_sim;
      }
      if (best == n || value > best_value) {
        best = i;
        best_value = value;
      }
    }
    taken[best] = true;
    selected.push_back(best);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

std::string RenderCombinedText(std::span<const SectionSummary> sections) {
  std::string text;
  for (const SectionSummary &section : sections) {
    if (section.bullets.empty()) continue;
    if (!text.empty()) text += "\n\n";
    for (size_t b = 0; b < section.bullets.size(); ++b) {
      if (b > 0) text.push_back('\n');
      std::string bullet = section.bullets[b].text;
      std::replace(bullet.begin(), bullet.end(), '\n', ' ');
      text += "- " + bullet;
    }
  }
  return text;
}

QualityBreakdown QualityComponents(const CaseSummary &summary,
                                   const ParsedJudgment &parsed,
                                   const SummaryConfig &cfg) {
  // Pool every summarizable sentence into one collection; section offsets
  // map bullets back into the pool.
  std::vector<TokenSequence> pool;
  std::map<SectionKind, size_t> section_offset;
  for (SectionKind kind : SummarizedSections(cfg)) {
    section_offset[kind] = pool.size();
    for (const Sentence &sentence : parsed.section(kind).sentences) {
      pool.push_back(Tokenize(sentence.text));
    }
  }
  const std::vector<TfIdfVector> vectors = TfIdfVectors(pool);

  std::map<std::string, double> term_mass;
  for (const TfIdfVector &v : vectors) {
    for (const auto &[token, weight] : v.terms) term_mass[token] += weight;
  }
  std::vector<std::pair<std::string, double>> ranked(term_mass.begin(),
                                                     term_mass.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    return a.second > b.second;
  });
  if (ranked.size() > cfg.coverage_terms) ranked.resize(cfg.coverage_terms);

  std::vector<size_t> bullet_rows;
  std::set<std::string> summary_tokens;
  for (const SectionSummary &section : summary.sections) {
    const auto offset = section_offset.find(section.kind);
    for (const Sentence &bullet : section.bullets) {
      if (offset != section_offset.end()) {
        bullet_rows.push_back(offset->second + bullet.index);
      }
      for (auto &token : Tokenize(bullet.text)) {
        summary_tokens.insert(std::move(token));
      }
    }
  }

  QualityBreakdown q;
  if (!ranked.empty()) {
    size_t covered = 0;
    for (const auto &[token, mass] : ranked) covered += summary_tokens.count(token);
    q.coverage = static_cast<double>(covered) / static_cast<double>(ranked.size());
  }
  if (bullet_rows.size() >= 2) {
    double sum = 0.0;
    size_t pairs = 0;
    for (size_t a = 0; a < bullet_rows.size(); ++a) {
      for (size_t b = a + 1; b < bullet_rows.size(); ++b) {
        sum += CosineSimilarity(vectors.at(bullet_rows[a]),
                                vectors.at(bullet_rows[b]));
        ++pairs;
      }
    }
    q.redundancy = sum / static_cast<double>(pairs);
  }
  if (!pool.empty()) {
    const double r = static_cast<double>(bullet_rows.size()) /
                     static_cast<double>(pool.size());
    q.length_fit = std::max(0.0, 1.0 - std::abs(r - cfg.ratio) / cfg.ratio);
  }
  q.total = std::clamp(cfg.quality.coverage * q.coverage +
                           cfg.quality.non_redundancy * (1.0 - q.redundancy) +
                           cfg.quality.length_fit * q.length_fit,
                       0.0, 1.0);
  return q;
}

double QualityScore(const CaseSummary &summary, const ParsedJudgment &parsed,
                    const SummaryConfig &cfg) {
  return QualityComponents(summary, parsed, cfg).total;
}

CaseSummary SelectBest(std::span<const CaseSummary> candidates) {
  if (candidates.empty()) {
    throw ValidationError("no candidate summaries to choose from");
  }
  const CaseSummary *best = &candidates.front();
  for (const CaseSummary &candidate : candidates.subspan(1)) {
    if (candidate.quality > best->quality ||
        (candidate.quality == best->quality && candidate.method < best->method)) {
      best = &candidate;
    }
  }
  return *best;
}

CaseSummary SummarizeWithScorer(const ParsedJudgment &parsed,
                                const SentenceScorer &scorer,
                                SummaryMethod method, const SummaryConfig &cfg,
                                std::string case_id) {
  cfg.Validate();
  if (method == SummaryMethod::kAuto) {
    throw ValidationError("a summary must record a concrete method");
  }
  CaseSummary summary;
  summary.case_id = std::move(case_id);
  summary.method = method;
  summary.ratio = cfg.ratio;
  for (SectionKind kind : SummarizedSections(cfg)) {
    const JudgmentSection &section = parsed.section(kind);
    SectionSummary out;
    out.kind = kind;
    out.source_count = section.sentences.size();
    const size_t k = SectionBudget(section.sentences.size(), cfg);
    if (k > 0) {
      const std::vector<TokenSequence> tokens = SectionTokens(section);
      const std::vector<double> scores = scorer.Score(section, tokens);
      if (scores.size() != tokens.size()) {
        throw ConfigurationError("scorer returned the wrong number of scores");
      }
      const auto similarity =
          SimilarityMatrix(tokens, RedundancySimilarity(method));
      for (size_t index : SelectBullets(scores, k, cfg.mmr_lambda, similarity)) {
        out.bullets.push_back(section.sentences[index]);
      }
    }
    summary.sections.push_back(std::move(out));
  }
  summary.combined_text = RenderCombinedText(summary.sections);
  summary.quality = QualityScore(summary, parsed, cfg);
  return summary;
}

CaseSummary SummarizeDocument(const ParsedJudgment &parsed,
                              SummaryMethod method, const SummaryConfig &cfg,
                              std::shared_ptr<const ScoringModel> model,
                              std::string case_id) {
  if (method != SummaryMethod::kAuto) {
    const auto scorer = MakeScorer(method, cfg, model);
    return SummarizeWithScorer(parsed, *scorer, method, cfg, std::move(case_id));
  }
  std::vector<SummaryMethod> methods = {SummaryMethod::kTextRank,
                                        SummaryMethod::kLexRank};
  if (model) methods.push_back(SummaryMethod::kSupervised);
  std::vector<CaseSummary> candidates;
  for (SummaryMethod candidate : methods) {
    candidates.push_back(
        SummarizeDocument(parsed, candidate, cfg, model, case_id));
  }
  return SelectBest(candidates);
}

}  // namespace lexsumm
