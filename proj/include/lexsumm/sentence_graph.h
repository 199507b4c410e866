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

#ifndef LEXSUMM_SENTENCE_GRAPH_H_
#define LEXSUMM_SENTENCE_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lexsumm {

using TokenSequence = std::vector<std::string>;

enum class SimilarityMethod { kOverlap, kTfIdfCosine };

// Sparse tf-isf vector, entries sorted by token.
struct TfIdfVector {
  std::vector<std::pair<std::string, double>> terms;

  double norm() const;
  bool empty() const { return terms.empty(); }
  bool operator==(const TfIdfVector &) const = default;
};

// |common unique tokens| / (ln|a| + ln|b|); 0 when the denominator is not
// positive or either side is empty.
double OverlapSimilarity(const TokenSequence &a, const TokenSequence &b);

// idf(t) = ln((1 + N) / (1 + df(t))) + 1 over the given sentences.
std::vector<TfIdfVector> TfIdfVectors(std::span<const TokenSequence> sentences);

// In [0, 1]; 0 when either vector has zero norm.
double CosineSimilarity(const TfIdfVector &u, const TfIdfVector &v);

struct GraphEdge {
  size_t to = 0;
  double weight = 0.0;

  bool operator==(const GraphEdge &) const = default;
};

// Undirected weighted graph without self-loops. Adjacency lists are sorted
// by neighbour index and hold every edge in both directions.
class SimilarityGraph {
 public:
  SimilarityGraph() = default;
  SimilarityGraph(size_t n, SimilarityMethod method, double threshold);

  // Requires i != j and weight > threshold; replaces an existing edge.
  void SetEdge(size_t i, size_t j, double weight);

  size_t size() const { return adjacency_.size(); }
  size_t edge_count() const;
  SimilarityMethod method() const { return method_; }
  double threshold() const { return threshold_; }
  const std::vector<GraphEdge> &neighbors(size_t i) const {
    return adjacency_[i];
  }
  std::optional<double> weight(size_t i, size_t j) const;

  bool operator==(const SimilarityGraph &) const = default;

 private:
  std::vector<std::vector<GraphEdge>> adjacency_;
  SimilarityMethod method_ = SimilarityMethod::kOverlap;
  double threshold_ = 0.0;
};

// Dense symmetric matrix of pairwise similarities, zero diagonal.
std::vector<std::vector<double>> SimilarityMatrix(
    std::span<const TokenSequence> sentences, SimilarityMethod method);

// Keeps edges whose similarity is strictly above `threshold` (>= 0).
SimilarityGraph BuildSimilarityGraph(std::span<const TokenSequence> sentences,
                                     SimilarityMethod method,
                                     double threshold);

}  // namespace lexsumm

#endif  // LEXSUMM_SENTENCE_GRAPH_H_
