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

#ifndef LEXSUMM_TESTS_TEST_SUPPORT_H_
#define LEXSUMM_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "lexsumm/corpus_store.h"
#include "lexsumm/sentence_graph.h"

namespace lexsumm::testing {

inline std::filesystem::path FixtureDir() { return LEXSUMM_FIXTURE_DIR; }

inline std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct FixtureCase {
  std::string stem;
  std::string raw_text;
  CaseMetadata metadata;
  std::optional<std::string> gold;
};

// Every tests/fixtures/corpus/*.txt that is not a gold file, sorted by name.
inline std::vector<FixtureCase> FixtureCorpus() {
  std::vector<FixtureCase> cases;
  const auto dir = FixtureDir() / "corpus";
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.path().extension() != ".txt") continue;
    if (name.ends_with(".gold.txt")) continue;
    FixtureCase c;
    c.stem = entry.path().stem().string();
    c.raw_text = ReadFile(entry.path());
    c.metadata = MetadataFromJson(
        nlohmann::json::parse(ReadFile(dir / (c.stem + ".meta.json"))));
    const auto gold = dir / (c.stem + ".gold.txt");
    if (std::filesystem::exists(gold)) c.gold = ReadFile(gold);
    cases.push_back(std::move(c));
  }
  std::sort(cases.begin(), cases.end(),
            [](const auto &a, const auto &b) { return a.stem < b.stem; });
  return cases;
}

// Fresh empty directory under the system temp dir.
class TempDir {
 public:
  explicit TempDir(const std::string &tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("lexsumm-" + tag + "-" + std::to_string(rd()));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Dense weight matrix of an Erdos-Renyi graph with weights in (0, 1].
inline std::vector<std::vector<double>> RandomWeights(std::mt19937_64 &rng,
                                                      size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (!edge(rng)) continue;
      double x = 1.0 - w(rng);  // (0, 1]
      m[i][j] = m[j][i] = x;
    }
  }
  return m;
}

inline SimilarityGraph GraphFromWeights(
    const std::vector<std::vector<double>> &m) {
  SimilarityGraph g(m.size(), SimilarityMethod::kOverlap, 0.0);
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = i + 1; j < m.size(); ++j) {
      if (m[i][j] > 0.0) g.SetEdge(i, j, m[i][j]);
    }
  }
  return g;
}

// Exact solution of S = (1 - d) + d * sum_j w_ij / W_j * S_j.
inline std::vector<double> SolveRankingSystem(
    const std::vector<std::vector<double>> &m, double d) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double wj = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) wj += m[j][k];
    if (wj == 0.0) continue;
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) -= d * m[i][j] / wj;
  }
  Eigen::VectorXd b = Eigen::VectorXd::Constant(n, 1.0 - d);
  Eigen::VectorXd s = a.fullPivLu().solve(b);
  return {s.data(), s.data() + n};
}

}  // namespace lexsumm::testing

#endif  // LEXSUMM_TESTS_TEST_SUPPORT_H_
