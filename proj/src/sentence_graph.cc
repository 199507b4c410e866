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

#include "lexsumm/sentence_graph.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lexsumm/error.h"

namespace lexsumm {
namespace {

std::vector<std::string> UniqueSorted(const TokenSequence &tokens) {
  std::vector<std::string> unique(tokens.begin(), tokens.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  return unique;
}

size_t CountCommon(const std::vector<std::string> &a,
                   const std::vector<std::string> &b) {
  size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

double OverlapFromUnique(size_t common, size_t len_a, size_t len_b) {
  if (len_a == 0 || len_b == 0) return 0.0;
  const double denominator = std::log(static_cast<double>(len_a)) +
                             std::log(static_cast<double>(len_b));
  if (denominator <= 0.0) return 0.0;
  return static_cast<double>(common) / denominator;
}

}  // namespace

double TfIdfVector::norm() const {
  double sum = 0.0;
  for (const auto &[token, weight] : terms) sum += weight * weight;
  return std::sqrt(sum);
}

double OverlapSimilarity(const TokenSequence &a, const TokenSequence &b) {
  return OverlapFromUnique(CountCommon(UniqueSorted(a), UniqueSorted(b)),
                           a.size(), b.size());
}

std::vector<TfIdfVector> TfIdfVectors(std::span<const TokenSequence> sentences) {
  std::map<std::string, size_t> document_frequency;
  std::vector<std::map<std::string, size_t>> term_counts(sentences.size());
  for (size_t s = 0; s < sentences.size(); ++s) {
    for (const std::string &token : sentences[s]) ++term_counts[s][token];
    for (const auto &[token, count] : term_counts[s]) {
      ++document_frequency[token];
    }
  }
  const double n = static_cast<double>(sentences.size());
  std::vector<TfIdfVector> vectors(sentences.size());
  for (size_t s = 0; s < sentences.size(); ++s) {
    vectors[s].terms.reserve(term_counts[s].size());
    for (const auto &[token, count] : term_counts[s]) {
      const double df = static_cast<double>(document_frequency[token]);
      const double idf = std::log((1.0 + n) / (1.0 + df)) + 1.0;
      vectors[s].terms.emplace_back(token, static_cast<double>(count) * idf);
    }
  }
  return vectors;
}

double CosineSimilarity(const TfIdfVector &u, const TfIdfVector &v) {
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (const auto &[token, weight] : u.terms) uu += weight * weight;
  for (const auto &[token, weight] : v.terms) vv += weight * weight;
  if (uu == 0.0 || vv == 0.0) return 0.0;
  auto i = u.terms.begin();
  auto j = v.terms.begin();
  while (i != u.terms.end() && j != v.terms.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      dot += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return std::clamp(dot / std::sqrt(uu * vv), 0.0, 1.0);
}

SimilarityGraph::SimilarityGraph(size_t n, SimilarityMethod method,
                                 double threshold)
    : adjacency_(n), method_(method), threshold_(threshold) {
  if (!(threshold >= 0.0)) {
    throw ValidationError("similarity threshold must be >= 0");
  }
}

void SimilarityGraph::SetEdge(size_t i, size_t j, double weight) {
  if (i == j || i >= size() || j >= size()) {
    throw ValidationError("invalid edge endpoints");
  }
  if (!(weight > threshold_)) {
    throw ValidationError("edge weight must exceed the graph threshold");
  }
  auto upsert = [](std::vector<GraphEdge> &list, size_t to, double w) {
    auto it = std::lower_bound(
        list.begin(), list.end(), to,
        [](const GraphEdge &e, size_t target) { return e.to < target; });
    if (it != list.end() && it->to == to) {
      it->weight = w;
    } else {
      list.insert(it, GraphEdge{to, w});
    }
  };
  upsert(adjacency_[i], j, weight);
  upsert(adjacency_[j], i, weight);
}

size_t SimilarityGraph::edge_count() const {
  size_t twice = 0;
  for (const auto &list : adjacency_) twice += list.size();
  return twice / 2;
}

std::optional<double> SimilarityGraph::weight(size_t i, size_t j) const {
  if (i >= size()) return std::nullopt;
  const auto &list = adjacency_[i];
  auto it = std::lower_bound(
      list.begin(), list.end(), j,
      [](const GraphEdge &e, size_t target) { return e.to < target; });
  if (it == list.end() || it->to != j) return std::nullopt;
  return it->weight;
}

std::vector<std::vector<double>> SimilarityMatrix(
    std::span<const TokenSequence> sentences, SimilarityMethod method) {
  const size_t n = sentences.size();
  std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
  if (method == SimilarityMethod::kOverlap) {
    std::vector<std::vector<std::string>> unique;
    unique.reserve(n);
    for (const auto &tokens : sentences) unique.push_back(UniqueSorted(tokens));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        const double sim = OverlapFromUnique(CountCommon(unique[i], unique[j]),
                                             sentences[i].size(),
                                             sentences[j].size());
        matrix[i][j] = matrix[j][i] = sim;
      }
    }
  } else {
    const std::vector<TfIdfVector> vectors = TfIdfVectors(sentences);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        const double sim = CosineSimilarity(vectors[i], vectors[j]);
        matrix[i][j] = matrix[j][i] = sim;
      }
    }
  }
  return matrix;
}

SimilarityGraph BuildSimilarityGraph(std::span<const TokenSequence> sentences,
                                     SimilarityMethod method,
                                     double threshold) {
  SimilarityGraph graph(sentences.size(), method, threshold);
  const auto matrix = SimilarityMatrix(sentences, method);
  for (size_t i = 0; i < sentences.size(); ++i) {
    for (size_t j = i + 1; j < sentences.size(); ++j) {
      if (matrix[i][j] > threshold) graph.SetEdge(i, j, matrix[i][j]);
    }
  }
  return graph;
}

}  // namespace lexsumm
