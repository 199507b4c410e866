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

#ifndef LEXSUMM_TEXT_PROCESSING_H_
#define LEXSUMM_TEXT_PROCESSING_H_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lexsumm {

// NFC-normalized text with LF line endings, single spaces and trimmed lines.
// All offsets in this library are UTF-8 byte offsets.
struct NormalizedText {
  std::string text;
  // Offsets where each line starts. Always begins with 0.
  std::vector<size_t> line_offsets = {0};

  size_t line_count() const { return line_offsets.size(); }
  // Line contents without the terminating '\n'.
  std::string_view line(size_t index) const;

  bool operator==(const NormalizedText &) const = default;
};

// Builds a NormalizedText from text that is already normalized.
NormalizedText FromNormalized(std::string text);

NormalizedText NormalizeText(std::string_view raw);

struct Sentence {
  size_t index = 0;
  std::string text;
  // [start, end) into the text the sentence was split from.
  size_t start = 0;
  size_t end = 0;

  bool operator==(const Sentence &) const = default;
};

// Period-terminated tokens that never end a sentence. A single uppercase
// letter followed by a period ("A.") is always treated as an abbreviation.
class AbbreviationTable {
 public:
  AbbreviationTable() = default;
  explicit AbbreviationTable(std::set<std::string> entries);

  static AbbreviationTable Default();
  // One entry per line, '#' starts a comment. Throws ValidationError for an
  // entry that does not end with '.'.
  static AbbreviationTable Parse(std::string_view contents);
  static AbbreviationTable Load(const std::filesystem::path &path);

  // `token` includes the trailing period.
  bool IsAbbreviation(std::string_view token) const;
  const std::set<std::string> &entries() const { return entries_; }

 private:
  std::set<std::string> entries_;
};

std::vector<Sentence> SplitSentences(std::string_view text,
                                     const AbbreviationTable &abbrevs);

// Lowercased maximal runs of letters and digits; combining marks stay
// attached to the run they follow.
std::vector<std::string> Tokenize(std::string_view text);

// True when every code point of `token` is a decimal digit.
bool IsNumericToken(std::string_view token);

// Unicode simple case folding, used for case-insensitive comparisons.
std::string FoldCase(std::string_view text);

}  // namespace lexsumm

#endif  // LEXSUMM_TEXT_PROCESSING_H_
