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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lexsumm/error.h"
#include "lexsumm/sentence_graph.h"

namespace lexsumm {
namespace {

std::vector<TokenSequence> RandomSentences(std::mt19937_64 &rng, size_t n) {
  static const std::vector<std::string> kVocab = {"a", "b", "c", "d", "e",
                                                  "f", "g", "h"};
  std::uniform_int_distribution<size_t> word(0, kVocab.size() - 1);
  std::uniform_int_distribution<int> len(0, 6);
  std::vector<TokenSequence> out(n);
  for (auto &s : out) {
    for (int i = len(rng); i > 0; --i) s.push_back(kVocab[word(rng)]);
  }
  return out;
}

// Straight transcription of the weight formula, one token at a time.
double OracleWeight(const std::vector<TokenSequence> &corpus, size_t s,
                    const std::string &token) {
  const double tf = static_cast<double>(
      std::count(corpus[s].begin(), corpus[s].end(), token));
  double df = 0;
  for (const auto &sentence : corpus) {
    if (std::find(sentence.begin(), sentence.end(), token) != sentence.end()) {
      ++df;
    }
  }
  const double n = static_cast<double>(corpus.size());
  return tf * (std::log((1 + n) / (1 + df)) + 1);
}

TEST_CASE("OverlapSimilarity") {
  CHECK(OverlapSimilarity({"a", "b", "c"}, {"b", "c", "d"}) ==
        doctest::Approx(2.0 / (std::log(3.0) + std::log(3.0))));
  CHECK(OverlapSimilarity({"a", "b", "c"}, {"b", "c", "d"}) ==
        doctest::Approx(0.9102).epsilon(1e-4));
  CHECK(OverlapSimilarity({"a", "b"}, {"c", "d"}) == 0.0);
  CHECK(OverlapSimilarity({"x"}, {"x"}) == 0.0);
  CHECK(OverlapSimilarity({}, {"x", "y"}) == 0.0);
  // Repeated tokens count once in the numerator.
  CHECK(OverlapSimilarity({"a", "a", "b"}, {"a", "a", "c"}) ==
        doctest::Approx(1.0 / (2 * std::log(3.0))));
}

TEST_CASE("TfIdfVectors formula") {
  const std::vector<TokenSequence> single = {{"a"}};
  const auto v = TfIdfVectors(single);
  REQUIRE(v.size() == 1);
  REQUIRE(v[0].terms.size() == 1);
  CHECK(v[0].terms[0].second == doctest::Approx(1.0));

  const std::vector<TokenSequence> pair = {{"a"}, {"b"}};
  for (const auto &vec : TfIdfVectors(pair)) {
    CHECK(vec.terms[0].second == doctest::Approx(std::log(1.5) + 1));
    CHECK(vec.terms[0].second == doctest::Approx(1.4055).epsilon(1e-4));
  }

  const std::vector<TokenSequence> shared = {{"x", "y"}, {"x"}, {"x", "z"}};
  for (const auto &vec : TfIdfVectors(shared)) {
    CHECK(vec.terms[0].first == "x");
    CHECK(vec.terms[0].second == doctest::Approx(1.0));
  }

  const std::vector<TokenSequence> with_empty = {{}, {"a"}};
  CHECK(TfIdfVectors(with_empty)[0].empty());
}

TEST_CASE("TfIdfVectors matches a per-token oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto corpus = RandomSentences(rng, 1 + trial % 7);
    const auto vectors = TfIdfVectors(corpus);
    REQUIRE(vectors.size() == corpus.size());
    for (size_t s = 0; s < corpus.size(); ++s) {
      const std::set<std::string> unique(corpus[s].begin(), corpus[s].end());
      REQUIRE(vectors[s].terms.size() == unique.size());
      auto it = unique.begin();
      for (const auto &[token, weight] : vectors[s].terms) {
        REQUIRE(token == *it++);
        REQUIRE(weight > 0.0);
        REQUIRE(weight == doctest::Approx(OracleWeight(corpus, s, token)));
      }
    }
  }
}

TEST_CASE("CosineSimilarity") {
  const TfIdfVector u{{{"a", 1.0}, {"b", 2.0}}};
  const TfIdfVector v{{{"c", 3.0}}};
  const TfIdfVector w{{{"a", 2.0}, {"c", 1.0}}};
  CHECK(CosineSimilarity(u, u) == doctest::Approx(1.0));
  CHECK(CosineSimilarity(u, v) == 0.0);
  CHECK(CosineSimilarity(TfIdfVector{}, u) == 0.0);
  CHECK(CosineSimilarity(u, w) == doctest::Approx(2.0 / (std::sqrt(5.0) * std::sqrt(5.0))));
  CHECK(u.norm() == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("CosineSimilarity bounds on random vectors") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> weight(1e-6, 10.0);
  std::bernoulli_distribution present(0.5);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e"};
  auto random_vector = [&] {
    TfIdfVector v;
    for (const auto &t : vocab) {
      if (present(rng)) v.terms.emplace_back(t, weight(rng));
    }
    return v;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto u = random_vector();
    const auto v = random_vector();
    const double c = CosineSimilarity(u, v);
    REQUIRE(c >= 0.0);
    REQUIRE(c <= 1.0);
    REQUIRE(c == CosineSimilarity(v, u));
    if (!u.empty()) REQUIRE(CosineSimilarity(u, u) == doctest::Approx(1.0));
  }
}

TEST_CASE("SimilarityGraph edges") {
  SimilarityGraph g(3, SimilarityMethod::kOverlap, 0.1);
  g.SetEdge(2, 0, 0.5);
  g.SetEdge(0, 1, 0.25);
  CHECK(g.edge_count() == 2);
  CHECK(g.weight(0, 2) == 0.5);
  CHECK(g.weight(2, 0) == 0.5);
  CHECK(g.weight(1, 2) == std::nullopt);
  CHECK(g.neighbors(0) == std::vector<GraphEdge>{{1, 0.25}, {2, 0.5}});
  g.SetEdge(0, 2, 0.75);
  CHECK(g.edge_count() == 2);
  CHECK(g.weight(2, 0) == 0.75);

  CHECK_THROWS_AS(g.SetEdge(1, 1, 0.5), ValidationError);
  CHECK_THROWS_AS(g.SetEdge(0, 3, 0.5), ValidationError);
  CHECK_THROWS_AS(g.SetEdge(0, 1, 0.1), ValidationError);
  CHECK_THROWS_AS(SimilarityGraph(2, SimilarityMethod::kOverlap, -0.1),
                  ValidationError);
}

TEST_CASE("BuildSimilarityGraph examples") {
  const std::vector<TokenSequence> same(3, TokenSequence{"tòa", "án", "xử"});
  const auto k3 = BuildSimilarityGraph(same, SimilarityMethod::kOverlap, 0.0);
  CHECK(k3.size() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.weight(0, 1) == k3.weight(1, 2));
  CHECK(k3.weight(0, 2) == k3.weight(1, 2));

  const std::vector<TokenSequence> disjoint = {{"a", "b"}, {"c", "d"}, {"e"}};
  for (auto method : {SimilarityMethod::kOverlap, SimilarityMethod::kTfIdfCosine}) {
    const auto g = BuildSimilarityGraph(disjoint, method, 0.0);
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 0);
  }

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sentences = RandomSentences(rng, 6);
    for (auto method :
         {SimilarityMethod::kOverlap, SimilarityMethod::kTfIdfCosine}) {
      const auto m = SimilarityMatrix(sentences, method);
      double max_sim = 0.0;
      for (const auto &row : m) {
        for (double x : row) max_sim = std::max(max_sim, x);
      }
      CHECK(BuildSimilarityGraph(sentences, method, max_sim).edge_count() == 0);
    }
  }
}

TEST_CASE("BuildSimilarityGraph agrees with pairwise similarity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sentences = RandomSentences(rng, 8);
    const auto vectors = TfIdfVectors(sentences);
    for (auto method :
         {SimilarityMethod::kOverlap, SimilarityMethod::kTfIdfCosine}) {
      const double threshold = method == SimilarityMethod::kOverlap ? 0.0 : 0.1;
      const auto g = BuildSimilarityGraph(sentences, method, threshold);
      for (size_t i = 0; i < sentences.size(); ++i) {
        REQUIRE_FALSE(g.weight(i, i).has_value());
        for (size_t j = 0; j < sentences.size(); ++j) {
          if (i == j) continue;
          const double sim =
              method == SimilarityMethod::kOverlap
                  ? OverlapSimilarity(sentences[i], sentences[j])
                  : CosineSimilarity(vectors[i], vectors[j]);
          REQUIRE(g.weight(i, j) == g.weight(j, i));
          if (sim > threshold) {
            REQUIRE(g.weight(i, j).has_value());
            REQUIRE(*g.weight(i, j) == doctest::Approx(sim));
          } else {
            REQUIRE_FALSE(g.weight(i, j).has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("Permuting sentences permutes the graph") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sentences = RandomSentences(rng, 7);
    std::vector<size_t> perm(sentences.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<TokenSequence> permuted;
    for (size_t p : perm) permuted.push_back(sentences[p]);
    for (auto method :
         {SimilarityMethod::kOverlap, SimilarityMethod::kTfIdfCosine}) {
      const auto g = BuildSimilarityGraph(sentences, method, 0.05);
      const auto h = BuildSimilarityGraph(permuted, method, 0.05);
      REQUIRE(g.edge_count() == h.edge_count());
      for (size_t i = 0; i < perm.size(); ++i) {
        for (size_t j = 0; j < perm.size(); ++j) {
          const auto a = h.weight(i, j);
          const auto b = g.weight(perm[i], perm[j]);
          REQUIRE(a.has_value() == b.has_value());
          if (a) REQUIRE(*a == doctest::Approx(*b).epsilon(1e-12));
        }
      }
    }
  }
}

}  // namespace
}  // namespace lexsumm
