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

#include "lexsumm/pipeline.h"

#include "lexsumm/corpus_store.h"

namespace lexsumm {

ParsedJudgment ParseText(std::string_view raw_text,
                         const ParserResources &resources) {
  return ParseJudgment(NormalizeText(raw_text), resources.headings,
                       resources.abbreviations);
}

CaseSummary SummarizeText(std::string_view raw_text, SummaryMethod method,
                          const SummaryConfig &cfg,
                          std::shared_ptr<const ScoringModel> model,
                          const ParserResources &resources) {
  return SummarizeDocument(ParseText(raw_text, resources), method, cfg,
                           std::move(model), CaseIdForText(raw_text));
}

}  // namespace lexsumm
