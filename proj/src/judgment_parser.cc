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

#include "lexsumm/judgment_parser.h"

#include <fstream>
#include <sstream>

#include "lexsumm/error.h"

namespace lexsumm {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Canonical comparison key: NFC, trimmed, one trailing ':' removed, folded.
std::string HeadingKey(std::string_view line) {
  const NormalizedText normalized = NormalizeText(line);
  std::string_view key = Trim(normalized.text);
  if (!key.empty() && key.back() == ':') key = Trim(key.substr(0, key.size() - 1));
  return FoldCase(key);
}

const std::vector<std::string> kNoPatterns;

}  // namespace

std::string_view SectionKindName(SectionKind kind) {
  switch (kind) {
    case SectionKind::kIntroduction:
      return "introduction";
    case SectionKind::kContent:
      return "content";
    case SectionKind::kAssessment:
      return "assessment";
    case SectionKind::kDecision:
      return "decision";
  }
  return "unknown";
}

SectionKind ParseSectionKind(std::string_view name) {
  for (SectionKind kind : kAllSections) {
    if (SectionKindName(kind) == name) return kind;
  }
  throw ValidationError("unknown section kind \"" + std::string(name) + "\"");
}

HeadingPatternTable HeadingPatternTable::Default() {
  HeadingPatternTable table;
  table.Add(SectionKind::kContent, "NỘI DUNG VỤ ÁN");
  table.Add(SectionKind::kAssessment, "NHẬN ĐỊNH CỦA TÒA ÁN");
  table.Add(SectionKind::kAssessment, "NHẬN ĐỊNH CỦA TOÀ ÁN");
  table.Add(SectionKind::kAssessment, "NHẬN ĐỊNH CỦA HỘI ĐỒNG XÉT XỬ");
  table.Add(SectionKind::kAssessment, "XÉT THẤY");
  table.Add(SectionKind::kDecision, "QUYẾT ĐỊNH");
  table.Add(SectionKind::kDecision, "VÌ CÁC LẼ TRÊN");
  return table;
}

HeadingPatternTable HeadingPatternTable::Parse(std::string_view contents) {
  HeadingPatternTable table;
  std::istringstream in{std::string(contents)};
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("heading pattern line " +
                            std::to_string(line_number) + ": expected key=pattern");
    }
    const std::string_view key = Trim(trimmed.substr(0, eq));
    const std::string_view pattern = Trim(trimmed.substr(eq + 1));
    if (key != "content" && key != "assessment" && key != "decision") {
      throw ValidationError("heading pattern line " +
                            std::to_string(line_number) + ": unknown key \"" +
                            std::string(key) + "\"");
    }
    if (pattern.empty()) {
      throw ValidationError("heading pattern line " +
                            std::to_string(line_number) + ": empty pattern");
    }
    table.Add(ParseSectionKind(key), pattern);
  }
  return table;
}

HeadingPatternTable HeadingPatternTable::Load(
    const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read heading file " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return Parse(contents.str());
}

void HeadingPatternTable::Add(SectionKind kind, std::string_view pattern) {
  if (kind == SectionKind::kIntroduction) {
    throw ValidationError("the introduction has no heading pattern");
  }
  patterns_[kind].emplace_back(pattern);
  rules_.push_back({kind, HeadingKey(pattern)});
}

std::optional<SectionKind> HeadingPatternTable::Match(
    std::string_view line) const {
  const std::string key = HeadingKey(line);
  if (key.empty()) return std::nullopt;
  std::optional<SectionKind> found;
  for (const Rule &rule : rules_) {
    if (rule.folded == key && (!found || rule.kind < *found)) found = rule.kind;
  }
  return found;
}

const std::vector<std::string> &HeadingPatternTable::patterns(
    SectionKind kind) const {
  const auto it = patterns_.find(kind);
  return it == patterns_.end() ? kNoPatterns : it->second;
}

std::vector<HeadingMatch> DetectHeadings(const NormalizedText &doc,
                                         const HeadingPatternTable &patterns) {
  std::vector<HeadingMatch> candidates;
  for (size_t i = 0; i < doc.line_count(); ++i) {
    const std::string_view line = doc.line(i);
    if (auto kind = patterns.Match(line)) {
      candidates.push_back({i, *kind, std::string(line)});
    }
  }
  const size_t m = candidates.size();
  if (m == 0) return {};

  // chain_length[i]: longest consistent chain starting at candidate i.
  std::vector<size_t> chain_length(m, 1);
  for (size_t i = m; i-- > 0;) {
    for (size_t j = i + 1; j < m; ++j) {
      if (candidates[j].kind > candidates[i].kind) {
        chain_length[i] = std::max(chain_length[i], chain_length[j] + 1);
      }
    }
  }
  size_t remaining = *std::max_element(chain_length.begin(), chain_length.end());

  std::vector<HeadingMatch> chain;
  size_t from = 0;
  while (remaining > 0) {
    std::optional<size_t> pick;
    for (size_t j = from; j < m; ++j) {
      if (chain_length[j] != remaining) continue;
      if (!chain.empty() && candidates[j].kind <= chain.back().kind) continue;
      if (!pick || candidates[j].kind < candidates[*pick].kind) pick = j;
    }
    chain.push_back(candidates[*pick]);
    from = *pick + 1;
    --remaining;
  }
  return chain;
}

ParsedJudgment ParseJudgment(const NormalizedText &doc,
                             const HeadingPatternTable &patterns,
                             const AbbreviationTable &abbrevs) {
  ParsedJudgment parsed;
  const size_t total_lines = doc.line_count();
  for (SectionKind kind : kAllSections) {
    JudgmentSection &section = parsed.section(kind);
    section.kind = kind;
    section.first_line = total_lines;
    section.body_offset = doc.text.size();
  }

  auto fill_body = [&](JudgmentSection &section, size_t first, size_t end) {
    section.first_line = first;
    section.line_count = end - first;
    if (first < total_lines) {
      section.body_offset = doc.line_offsets[first];
    }
    if (section.line_count == 0) {
      section.body = NormalizedText{};
      return;
    }
    const size_t text_end =
        end < total_lines ? doc.line_offsets[end] - 1 : doc.text.size();
    section.body =
        FromNormalized(doc.text.substr(section.body_offset,
                                       text_end - section.body_offset));
    section.sentences = SplitSentences(section.body.text, abbrevs);
  };

  const std::vector<HeadingMatch> headings = DetectHeadings(doc, patterns);
  if (headings.empty()) {
    parsed.degraded = true;
    fill_body(parsed.section(SectionKind::kContent), 0, total_lines);
    return parsed;
  }

  fill_body(parsed.section(SectionKind::kIntroduction), 0,
            headings.front().line_index);
  for (size_t h = 0; h < headings.size(); ++h) {
    JudgmentSection &section = parsed.section(headings[h].kind);
    section.heading_line = headings[h].raw_line;
    section.heading_line_index = headings[h].line_index;
    const size_t end =
        h + 1 < headings.size() ? headings[h + 1].line_index : total_lines;
    fill_body(section, headings[h].line_index + 1, end);
  }
  return parsed;
}

std::string ReassembleJudgment(const ParsedJudgment &parsed) {
  std::vector<std::string_view> lines;
  for (const JudgmentSection &section : parsed.sections) {
    if (section.heading_line) lines.push_back(*section.heading_line);
    for (size_t i = 0; i < section.line_count; ++i) {
      lines.push_back(section.body.line(i));
    }
  }
  std::string text;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) text.push_back('\n');
    text += lines[i];
  }
  return text;
}

}  // namespace lexsumm
