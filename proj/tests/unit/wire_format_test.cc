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

#include "lexsumm/error.h"
#include "lexsumm/pipeline.h"
#include "lexsumm/wire_format.h"
#include "test_support.h"

namespace lexsumm {
namespace {

using nlohmann::json;

TEST_CASE("ParseSummarizeRequest") {
  const auto defaults = ParseSummarizeRequest(nullptr);
  CHECK(defaults.method == SummaryMethod::kAuto);
  CHECK_FALSE(defaults.ratio);
  CHECK(ParseSummarizeRequest(json::object()).method == SummaryMethod::kAuto);

  const auto full = ParseSummarizeRequest(
      {{"method", "lexrank"}, {"ratio", 0.5}, {"include_introduction", true}});
  CHECK(full.method == SummaryMethod::kLexRank);
  CHECK(full.ratio == 0.5);
  CHECK(full.include_introduction == true);

  CHECK_THROWS_AS(ParseSummarizeRequest({{"method", "bert"}}), ValidationError);
  CHECK_THROWS_AS(ParseSummarizeRequest({{"method", 3}}), ValidationError);
  CHECK_THROWS_AS(ParseSummarizeRequest({{"ratio", 0}}), ValidationError);
  CHECK_THROWS_AS(ParseSummarizeRequest({{"ratio", 1.2}}), ValidationError);
  CHECK_THROWS_AS(ParseSummarizeRequest({{"ratio", "0.3"}}), ValidationError);
  CHECK_THROWS_AS(ParseSummarizeRequest({{"include_introduction", 1}}),
                  ValidationError);
  CHECK_THROWS_AS(ParseSummarizeRequest(json::array()), ValidationError);
}

TEST_CASE("ApplyRequest") {
  SummaryConfig base;
  SummarizeRequest request;
  request.ratio = 0.6;
  const auto cfg = ApplyRequest(base, request);
  CHECK(cfg.ratio == 0.6);
  CHECK_FALSE(cfg.include_introduction);
  request.include_introduction = true;
  CHECK(ApplyRequest(base, request).include_introduction);
}

TEST_CASE("Summary JSON round-trips exactly") {
  const ParserResources res;
  const auto model = std::make_shared<const ScoringModel>(
      LoadModel(testing::FixtureDir() / "model.json"));
  for (const auto &fixture : testing::FixtureCorpus()) {
    for (auto method : {SummaryMethod::kTextRank, SummaryMethod::kLexRank,
                        SummaryMethod::kSupervised, SummaryMethod::kAuto}) {
      SummaryConfig cfg;
      cfg.ratio = 0.45;
      const auto summary = SummarizeText(fixture.raw_text, method, cfg, model, res);
      const json body = SummaryToJson(summary, cfg);
      CHECK(body["method_used"] != "auto");
      CHECK(body["config"]["damping"] == 0.85);
      // Through text, as a client would see it.
      CHECK(SummaryFromJson(json::parse(body.dump())) == summary);
    }
  }
}

TEST_CASE("SummaryFromJson rejects malformed bodies") {
  CHECK_THROWS_AS(SummaryFromJson(json::object()), DecodeError);
  CaseSummary s;
  s.sections = {{SectionKind::kDecision, {{0, "Xử.", 0, 4}}, 1}};
  json body = SummaryToJson(s, SummaryConfig{});
  body["method_used"] = "bert";
  CHECK_THROWS_AS(SummaryFromJson(body), DecodeError);
  body = SummaryToJson(s, SummaryConfig{});
  body["sections"][0]["sentences"] = json::array();
  CHECK_THROWS_AS(SummaryFromJson(body), DecodeError);
  body = SummaryToJson(s, SummaryConfig{});
  body["sections"][0]["kind"] = "verdict";
  CHECK_THROWS_AS(SummaryFromJson(body), DecodeError);
}

}  // namespace
}  // namespace lexsumm
