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

#ifndef LEXSUMM_JUDGMENT_PARSER_H_
#define LEXSUMM_JUDGMENT_PARSER_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexsumm/text_processing.h"

namespace lexsumm {

// Statutory parts of a judgment, in document order.
enum class SectionKind { kIntroduction = 0, kContent, kAssessment, kDecision };

inline constexpr std::array<SectionKind, 4> kAllSections = {
    SectionKind::kIntroduction, SectionKind::kContent,
    SectionKind::kAssessment, SectionKind::kDecision};

// "introduction", "content", "assessment", "decision".
std::string_view SectionKindName(SectionKind kind);
// Throws ValidationError on an unknown name.
SectionKind ParseSectionKind(std::string_view name);

// Whole-line heading rules per section. Matching is case-insensitive but
// keeps diacritics; a single trailing ':' on the line is ignored.
class HeadingPatternTable {
 public:
  HeadingPatternTable() = default;

  static HeadingPatternTable Default();
  // "key=pattern" lines with key in {content, assessment, decision}; blank
  // lines and '#' comments are skipped.
  static HeadingPatternTable Parse(std::string_view contents);
  static HeadingPatternTable Load(const std::filesystem::path &path);

  // Throws ValidationError for kIntroduction, which is the prefix region.
  void Add(SectionKind kind, std::string_view pattern);

  std::optional<SectionKind> Match(std::string_view line) const;
  const std::vector<std::string> &patterns(SectionKind kind) const;

 private:
  struct Rule {
    SectionKind kind;
    std::string folded;
  };
  std::map<SectionKind, std::vector<std::string>> patterns_;
  std::vector<Rule> rules_;
};

struct HeadingMatch {
  size_t line_index = 0;
  SectionKind kind = SectionKind::kContent;
  std::string raw_line;

  bool operator==(const HeadingMatch &) const = default;
};

// Returns the longest chain of heading matches with strictly increasing
// line index and section kind. Among equally long chains the one whose kinds
// come first wins, then the one with the earliest lines.
std::vector<HeadingMatch> DetectHeadings(const NormalizedText &doc,
                                         const HeadingPatternTable &patterns);

struct JudgmentSection {
  SectionKind kind = SectionKind::kIntroduction;
  std::optional<std::string> heading_line;
  std::optional<size_t> heading_line_index;
  // Body lines [first_line, first_line + line_count) of the document.
  size_t first_line = 0;
  size_t line_count = 0;
  // Byte offset of the body within the document text.
  size_t body_offset = 0;
  NormalizedText body;
  std::vector<Sentence> sentences;

  bool present() const { return heading_line.has_value() || line_count > 0; }
  bool empty() const { return sentences.empty(); }

  bool operator==(const JudgmentSection &) const = default;
};

struct ParsedJudgment {
  std::array<JudgmentSection, 4> sections;
  bool degraded = false;

  const JudgmentSection &section(SectionKind kind) const {
    return sections[static_cast<size_t>(kind)];
  }
  JudgmentSection &section(SectionKind kind) {
    return sections[static_cast<size_t>(kind)];
  }

  bool operator==(const ParsedJudgment &) const = default;
};

ParsedJudgment ParseJudgment(const NormalizedText &doc,
                             const HeadingPatternTable &patterns,
                             const AbbreviationTable &abbrevs);

// Joins introduction, headings and bodies back into the document text.
std::string ReassembleJudgment(const ParsedJudgment &parsed);

}  // namespace lexsumm

#endif  // LEXSUMM_JUDGMENT_PARSER_H_
