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

#include "lexsumm/wire_format.h"

#include "lexsumm/error.h"

namespace lexsumm {

using nlohmann::json;

SummarizeRequest ParseSummarizeRequest(const json &body) {
  SummarizeRequest request;
  if (body.is_null()) return request;
  if (!body.is_object()) throw ValidationError("request body must be an object");
  if (body.contains("method")) {
    if (!body["method"].is_string()) {
      throw ValidationError("\"method\" must be a string");
    }
    request.method = ParseSummaryMethod(body["method"].get<std::string>());
  }
  if (body.contains("ratio") && !body["ratio"].is_null()) {
    if (!body["ratio"].is_number()) {
      throw ValidationError("\"ratio\" must be a number");
    }
    const double ratio = body["ratio"].get<double>();
    if (!(ratio > 0.0 && ratio <= 1.0)) {
      throw ValidationError("\"ratio\" must lie in (0, 1]");
    }
    request.ratio = ratio;
  }
  if (body.contains("include_introduction") &&
      !body["include_introduction"].is_null()) {
    if (!body["include_introduction"].is_boolean()) {
      throw ValidationError("\"include_introduction\" must be a boolean");
    }
    request.include_introduction = body["include_introduction"].get<bool>();
  }
  return request;
}

SummaryConfig ApplyRequest(SummaryConfig base, const SummarizeRequest &request) {
  if (request.ratio) base.ratio = *request.ratio;
  if (request.include_introduction) {
    base.include_introduction = *request.include_introduction;
  }
  return base;
}

json SummaryToJson(const CaseSummary &summary, const SummaryConfig &cfg) {
  json sections = json::array();
  for (const SectionSummary &section : summary.sections) {
    json bullets = json::array();
    json sentences = json::array();
    for (const Sentence &bullet : section.bullets) {
      bullets.push_back(bullet.text);
      sentences.push_back(
          {{"index", bullet.index}, {"start", bullet.start}, {"end", bullet.end}});
    }
    sections.push_back({{"kind", SectionKindName(section.kind)},
                        {"bullets", std::move(bullets)},
                        {"sentences", std::move(sentences)},
                        {"source_count", section.source_count}});
  }
  return {{"case_id", summary.case_id},
          {"method_used", SummaryMethodName(summary.method)},
          {"quality", summary.quality},
          {"sections", std::move(sections)},
          {"combined_text", summary.combined_text},
          {"config",
           {{"ratio", summary.ratio},
            {"damping", cfg.ranking.damping},
            {"include_introduction", cfg.include_introduction}}}};
}

CaseSummary SummaryFromJson(const json &response) {
  try {
    CaseSummary summary;
    summary.case_id = response.at("case_id").get<std::string>();
    summary.method = ParseSummaryMethod(response.at("method_used").get<std::string>());
    summary.quality = response.at("quality").get<double>();
    summary.combined_text = response.at("combined_text").get<std::string>();
    summary.ratio = response.at("config").at("ratio").get<double>();
    for (const json &section : response.at("sections")) {
      SectionSummary out;
      out.kind = ParseSectionKind(section.at("kind").get<std::string>());
      out.source_count = section.at("source_count").get<size_t>();
      const json &bullets = section.at("bullets");
      const json &sentences = section.at("sentences");
      if (bullets.size() != sentences.size()) {
        throw DecodeError("bullets and sentences differ in length");
      }
      for (size_t b = 0; b < bullets.size(); ++b) {
        Sentence sentence;
        sentence.text = bullets[b].get<std::string>();
        sentence.index = sentences[b].at("index").get<size_t>();
        sentence.start = sentences[b].at("start").get<size_t>();
        sentence.end = sentences[b].at("end").get<size_t>();
        out.bullets.push_back(std::move(sentence));
      }
      summary.sections.push_back(std::move(out));
    }
    return summary;
  } catch (const json::exception &e) {
    throw DecodeError(std::string("malformed summary response: ") + e.what());
  } catch (const ValidationError &e) {
    throw DecodeError(std::string("malformed summary response: ") + e.what());
  }
}

}  // namespace lexsumm
