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

#ifndef LEXSUMM_PIPELINE_H_
#define LEXSUMM_PIPELINE_H_

#include <memory>
#include <string>
#include <string_view>

#include "lexsumm/judgment_parser.h"
#include "lexsumm/summarizer.h"
#include "lexsumm/text_processing.h"

namespace lexsumm {

// Heading and abbreviation tables shared by every entry point.
struct ParserResources {
  HeadingPatternTable headings = HeadingPatternTable::Default();
  AbbreviationTable abbreviations = AbbreviationTable::Default();
};

ParsedJudgment ParseText(std::string_view raw_text,
                         const ParserResources &resources);

// normalize -> parse -> summarize; the case id is the content hash.
CaseSummary SummarizeText(std::string_view raw_text, SummaryMethod method,
                          const SummaryConfig &cfg,
                          std::shared_ptr<const ScoringModel> model,
                          const ParserResources &resources);

}  // namespace lexsumm

#endif  // LEXSUMM_PIPELINE_H_
