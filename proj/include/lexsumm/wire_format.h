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

#ifndef LEXSUMM_WIRE_FORMAT_H_
#define LEXSUMM_WIRE_FORMAT_H_

#include <optional>

#include "json.hpp"
#include "lexsumm/summarizer.h"

namespace lexsumm {

// Body of POST /cases/{id}/summary.
struct SummarizeRequest {
  SummaryMethod method = SummaryMethod::kAuto;
  std::optional<double> ratio;
  std::optional<bool> include_introduction;
};

// Throws ValidationError for unknown methods, out-of-range ratios and wrong
// field types. A null or empty object yields the defaults.
SummarizeRequest ParseSummarizeRequest(const nlohmann::json &body);
SummaryConfig ApplyRequest(SummaryConfig base, const SummarizeRequest &request);

// SummarizeResponse: {case_id, method_used, quality, sections, combined_text,
// config}. Sections carry the bullet strings plus their sentence offsets so
// that the response converts back into the exact CaseSummary.
nlohmann::json SummaryToJson(const CaseSummary &summary,
                             const SummaryConfig &cfg);
// Throws DecodeError on a malformed response.
CaseSummary SummaryFromJson(const nlohmann::json &response);

}  // namespace lexsumm

#endif  // LEXSUMM_WIRE_FORMAT_H_
