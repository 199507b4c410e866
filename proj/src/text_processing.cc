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

#include "lexsumm/text_processing.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lexsumm/error.h"

namespace lexsumm {
namespace {

// Decodes the code point starting at byte `pos`; advances `pos` past it.
UChar32 NextCodePoint(std::string_view text, size_t &pos) {
  int32_t i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(text.data(), i, static_cast<int32_t>(text.size()), c);
  pos = static_cast<size_t>(i);
  return c;
}

UChar32 CodePointAt(std::string_view text, size_t pos) {
  return NextCodePoint(text, pos);
}

bool IsBlank(char c) { return c == ' ' || c == '\n'; }

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

bool IsCloser(UChar32 c) {
  switch (c) {
    case '"':
    case '\'':
    case ')':
    case ']':
    case 0x201D:  // ”
    case 0x2019:  // ’
    case 0x00BB:  // »
      return true;
    default:
      return false;
  }
}

bool IsOpener(UChar32 c) {
  switch (c) {
    case '"':
    case '\'':
    case '(':
    case '[':
    case 0x201C:  // “
    case 0x2018:  // ‘
    case 0x00AB:  // «
      return true;
    default:
      return false;
  }
}

bool IsWordChar(UChar32 c) { return u_isalpha(c) || u_isdigit(c); }

bool IsMark(UChar32 c) { return (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0; }

std::string NormalizeLine(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  for (char c : line) {
    if (c == ' ') {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

// The whitespace-delimited token ending at `end`, without leading quotes or
// brackets.
std::string_view TokenEndingAt(std::string_view text, size_t end) {
  size_t begin = end;
  while (begin > 0 && !IsBlank(text[begin - 1])) --begin;
  while (begin < end) {
    size_t next = begin;
    if (!IsOpener(NextCodePoint(text, next))) break;
    begin = next;
  }
  return text.substr(begin, end - begin);
}

bool StartsListItem(std::string_view line) {
  if (line.empty()) return false;
  if (line[0] == '-' || line[0] == '+') return true;
  size_t i = 0;
  while (i < line.size() && IsAsciiDigit(line[i])) ++i;
  if (i == 0 || i == line.size()) return false;
  if (line[i] == ')') return true;
  return line[i] == '.' && (i + 1 == line.size() || !IsAsciiDigit(line[i + 1]));
}

}  // namespace

std::string_view NormalizedText::line(size_t index) const {
  const size_t begin = line_offsets.at(index);
  const size_t end = index + 1 < line_offsets.size()
                         ? line_offsets[index + 1] - 1
                         : text.size();
  return std::string_view(text).substr(begin, end - begin);
}

NormalizedText FromNormalized(std::string text) {
  NormalizedText result;
  result.text = std::move(text);
  for (size_t i = 0; i < result.text.size(); ++i) {
    if (result.text[i] == '\n') result.line_offsets.push_back(i + 1);
  }
  return result;
}

NormalizedText NormalizeText(std::string_view raw) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  icu::UnicodeString composed;
  if (U_SUCCESS(status)) {
    composed = nfc->normalize(icu::UnicodeString::fromUTF8(
                                  icu::StringPiece(raw.data(), raw.size())),
                              status);
  }
  std::string utf8;
  if (U_SUCCESS(status)) {
    composed.toUTF8String(utf8);
  } else {
    utf8.assign(raw);
  }

  std::string unified;
  unified.reserve(utf8.size());
  for (size_t i = 0; i < utf8.size(); ++i) {
    const char c = utf8[i];
    if (c == '\r') {
      unified.push_back('\n');
      if (i + 1 < utf8.size() && utf8[i + 1] == '\n') ++i;
    } else if (c == '\t' || c == '\v' || c == '\f') {
      unified.push_back(' ');
    } else {
      unified.push_back(c);
    }
  }

  std::string text;
  text.reserve(unified.size());
  size_t begin = 0;
  while (true) {
    const size_t nl = unified.find('\n', begin);
    const std::string_view line = std::string_view(unified).substr(
        begin, nl == std::string::npos ? std::string::npos : nl - begin);
    text += NormalizeLine(line);
    if (nl == std::string::npos) break;
    text.push_back('\n');
    begin = nl + 1;
  }
  return FromNormalized(std::move(text));
}

AbbreviationTable::AbbreviationTable(std::set<std::string> entries)
    : entries_(std::move(entries)) {
  for (const auto &entry : entries_) {
    if (entry.empty() || entry.back() != '.') {
      throw ValidationError("abbreviation must end with '.': \"" + entry +
                            "\"");
    }
  }
}

AbbreviationTable AbbreviationTable::Default() {
  return AbbreviationTable({"TP.", "Tp.", "ThS.", "TS.", "Ô.", "B.", "Nr.",
                            "St.", "PGS.", "GS.", "BS.", "LS.", "tr."});
}

AbbreviationTable AbbreviationTable::Parse(std::string_view contents) {
  std::set<std::string> entries;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    entries.insert(line.substr(first, last - first + 1));
  }
  return AbbreviationTable(std::move(entries));
}

AbbreviationTable AbbreviationTable::Load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read abbreviation file " + path.string());
  }
  std::ostringstream contents;
  contents << in.rdbuf();
  return Parse(contents.str());
}

bool AbbreviationTable::IsAbbreviation(std::string_view token) const {
  if (token.size() < 2 || token.back() != '.') return false;
  if (entries_.count(std::string(token)) > 0) return true;
  size_t pos = 0;
  const UChar32 first = NextCodePoint(token, pos);
  return pos + 1 == token.size() && u_isupper(first);
}

std::vector<Sentence> SplitSentences(std::string_view text,
                                     const AbbreviationTable &abbrevs) {
  const size_t n = text.size();
  std::vector<size_t> cuts;
  size_t line_start = 0;
  for (size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c == '.' || c == '!' || c == '?' || c == ';') {
      if (c == '.' && i > 0 && i + 1 < n && IsAsciiDigit(text[i - 1]) &&
          IsAsciiDigit(text[i + 1])) {
        continue;
      }
      size_t j = i + 1;
      while (j < n) {
        size_t next = j;
        if (!IsCloser(NextCodePoint(text, next))) break;
        j = next;
      }
      if (j >= n || !IsBlank(text[j])) continue;
      size_t k = j;
      while (k < n && IsBlank(text[k])) ++k;
      if (k >= n) continue;
      const UChar32 lead = CodePointAt(text, k);
      if (!u_isupper(lead) && !u_isdigit(lead)) continue;
      if (c == '.' && j == i + 1 &&
          abbrevs.IsAbbreviation(TokenEndingAt(text, i + 1))) {
        continue;
      }
      cuts.push_back(j);
    } else if (c == '\n') {
      const std::string_view line = text.substr(line_start, i - line_start);
      const size_t next_end = text.find('\n', i + 1);
      const std::string_view next_line = text.substr(
          i + 1, next_end == std::string_view::npos ? std::string_view::npos
                                                      : next_end - i - 1);
      const auto last = line.find_last_not_of(' ');
      const bool ends_with_colon =
          last != std::string_view::npos && line[last] == ':';
      const bool blank_follows = i + 1 < n && next_line.empty();
      if (ends_with_colon || blank_follows || StartsListItem(next_line)) {
        cuts.push_back(i);
      }
      line_start = i + 1;
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(n);

  std::vector<Sentence> sentences;
  size_t begin = 0;
  for (size_t cut : cuts) {
    size_t start = begin;
    size_t end = cut;
    while (start < end && IsBlank(text[start])) ++start;
    while (end > start && IsBlank(text[end - 1])) --end;
    if (start < end) {
      Sentence sentence;
      sentence.index = sentences.size();
      sentence.text.assign(text.substr(start, end - start));
      sentence.start = start;
      sentence.end = end;
      sentences.push_back(std::move(sentence));
    }
    begin = cut;
  }
  return sentences;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t pos = 0;
  size_t token_start = std::string_view::npos;
  auto flush = [&](size_t end) {
    if (token_start == std::string_view::npos) return;
    const std::string_view raw = text.substr(token_start, end - token_start);
    icu::UnicodeString lowered =
        icu::UnicodeString::fromUTF8(icu::StringPiece(raw.data(), raw.size()));
    lowered.toLower(icu::Locale::getRoot());
    std::string token;
    lowered.toUTF8String(token);
    tokens.push_back(std::move(token));
    token_start = std::string_view::npos;
  };
  while (pos < text.size()) {
    const size_t here = pos;
    const UChar32 c = NextCodePoint(text, pos);
    const bool in_token = token_start != std::string_view::npos;
    if (IsWordChar(c) || (in_token && IsMark(c))) {
      if (!in_token) token_start = here;
    } else {
      flush(here);
    }
  }
  flush(text.size());
  return tokens;
}

bool IsNumericToken(std::string_view token) {
  if (token.empty()) return false;
  size_t pos = 0;
  while (pos < token.size()) {
    if (!u_isdigit(NextCodePoint(token, pos))) return false;
  }
  return true;
}

std::string FoldCase(std::string_view text) {
  icu::UnicodeString folded =
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), text.size()));
  folded.foldCase();
  std::string out;
  folded.toUTF8String(out);
  return out;
}

}  // namespace lexsumm
