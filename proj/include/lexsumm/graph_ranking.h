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

#ifndef LEXSUMM_GRAPH_RANKING_H_
#define LEXSUMM_GRAPH_RANKING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "lexsumm/sentence_graph.h"

namespace lexsumm {

struct RankingConfig {
  static constexpr double kDefaultDamping = 0.85;
  static constexpr double kDefaultEpsilon = 1e-6;
  static constexpr size_t kDefaultMaxIterations = 100;

  double damping = kDefaultDamping;
  double epsilon = kDefaultEpsilon;
  size_t max_iterations = kDefaultMaxIterations;

  // Throws ValidationError unless 0 < damping < 1, epsilon > 0 and
  // max_iterations >= 1.
  void Validate() const;
};

struct RankResult {
  std::vector<double> scores;
  size_t iterations = 0;
  bool converged = false;
  // Max-absolute score change of the last iteration.
  double residual = 0.0;
};

// One synchronous update:
//   S'_i = (1 - d) + d * sum_{j ~ i} w_ij / W_j * S_j,  W_j = sum_k w_jk.
std::vector<double> RankingStep(const SimilarityGraph &graph,
                                std::span<const double> scores,
                                double damping);

// Iterates RankingStep from S = 1 until the L-infinity change drops below
// epsilon or max_iterations is reached. Running out of iterations is not an
// error; the last iterate is returned with converged = false.
RankResult PowerIterate(const SimilarityGraph &graph, const RankingConfig &cfg);

// Vertex indices by descending score, ties by ascending index.
std::vector<size_t> RankOrder(std::span<const double> scores);
std::vector<size_t> RankSentences(const SimilarityGraph &graph,
                                  const RankingConfig &cfg);

}  // namespace lexsumm

#endif  // LEXSUMM_GRAPH_RANKING_H_
