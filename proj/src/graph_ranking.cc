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

#include "lexsumm/graph_ranking.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lexsumm/error.h"

namespace lexsumm {
namespace {

std::vector<double> WeightedDegrees(const SimilarityGraph &graph) {
  std::vector<double> degrees(graph.size(), 0.0);
  for (size_t j = 0; j < graph.size(); ++j) {
    for (const GraphEdge &edge : graph.neighbors(j)) degrees[j] += edge.weight;
  }
  return degrees;
}

void Step(const SimilarityGraph &graph, std::span<const double> degrees,
          std::span<const double> scores, double damping,
          std::vector<double> &out) {
  out.assign(graph.size(), 0.0);
  for (size_t i = 0; i < graph.size(); ++i) {
    double propagated = 0.0;
    for (const GraphEdge &edge : graph.neighbors(i)) {
      propagated += edge.weight / degrees[edge.to] * scores[edge.to];
    }
    out[i] = (1.0 - damping) + damping * propagated;
  }
}

}  // namespace

void RankingConfig::Validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw ValidationError("damping must lie in (0, 1)");
  }
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  if (max_iterations < 1) {
    throw ValidationError("max_iterations must be at least 1");
  }
}

std::vector<double> RankingStep(const SimilarityGraph &graph,
                                std::span<const double> scores,
                                double damping) {
  if (scores.size() != graph.size()) {
    throw ValidationError("score vector does not match graph size");
  }
  const std::vector<double> degrees = WeightedDegrees(graph);
  std::vector<double> next;
  Step(graph, degrees, scores, damping, next);
  return next;
}

RankResult PowerIterate(const SimilarityGraph &graph, const RankingConfig &cfg) {
  cfg.Validate();
  RankResult result;
  if (graph.size() == 0) {
    result.converged = true;
    return result;
  }
  const std::vector<double> degrees = WeightedDegrees(graph);
  std::vector<double> scores(graph.size(), 1.0);
  std::vector<double> next;
  while (result.iterations < cfg.max_iterations) {
    Step(graph, degrees, scores, cfg.damping, next);
    ++result.iterations;
    double change = 0.0;
    for (size_t i = 0; i < scores.size(); ++i) {
      change = std::max(change, std::abs(next[i] - scores[i]));
    }
    scores.swap(next);
    result.residual = change;
    if (change < cfg.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(scores);
  return result;
}

std::vector<size_t> RankOrder(std::span<const double> scores) {
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return scores[a] > scores[b];
  });
  return order;
}

std::vector<size_t> RankSentences(const SimilarityGraph &graph,
                                  const RankingConfig &cfg) {
  return RankOrder(PowerIterate(graph, cfg).scores);
}

}  // namespace lexsumm
