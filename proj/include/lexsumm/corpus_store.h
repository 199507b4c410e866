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

#ifndef LEXSUMM_CORPUS_STORE_H_
#define LEXSUMM_CORPUS_STORE_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace lexsumm {

// Calendar date, ISO-8601 "YYYY-MM-DD" on the wire.
class Date {
 public:
  Date() = default;
  // Throws ValidationError for an impossible date.
  Date(int year, unsigned month, unsigned day);

  // Throws ValidationError unless `text` is a valid "YYYY-MM-DD" date.
  static Date Parse(std::string_view text);

  int year() const { return year_; }
  unsigned month() const { return month_; }
  unsigned day() const { return day_; }
  std::string ToString() const;

  auto operator<=>(const Date &) const = default;

 private:
  int year_ = 1970;
  unsigned month_ = 1;
  unsigned day_ = 1;
};

struct CaseMetadata {
  std::string title;
  std::string court;
  std::string jurisdiction;
  std::string subject_matter;
  Date decision_date;

  bool operator==(const CaseMetadata &) const = default;
};

struct CaseDocument {
  std::string id;
  CaseMetadata metadata;
  std::string raw_text;
  std::string ingested_at;

  bool operator==(const CaseDocument &) const = default;
};

struct QueryFilter {
  static constexpr size_t kDefaultPageSize = 20;

  std::optional<std::string> subject_matter;
  std::optional<std::string> jurisdiction;
  std::optional<Date> from;
  std::optional<Date> to;
  size_t page = 1;
  size_t page_size = kDefaultPageSize;

  // Throws ValidationError for from > to, page < 1 or page_size < 1.
  void Validate() const;
  bool Matches(const CaseMetadata &metadata) const;
};

struct CaseListing {
  std::string id;
  CaseMetadata metadata;

  bool operator==(const CaseListing &) const = default;
};

struct QueryPage {
  std::vector<CaseListing> items;
  size_t total = 0;
  size_t page = 1;
  size_t page_size = QueryFilter::kDefaultPageSize;
};

// Lowercase hex SHA-256 of the normalized text.
std::string CaseIdForText(std::string_view raw_text);
bool IsValidCaseId(std::string_view id);

nlohmann::json MetadataToJson(const CaseMetadata &metadata);
// Throws ValidationError naming the offending field.
CaseMetadata MetadataFromJson(const nlohmann::json &json);
nlohmann::json DocumentToJson(const CaseDocument &document);
CaseDocument DocumentFromJson(const nlohmann::json &json);

// Directory-backed case database: <id>.json per case plus index.json holding
// id -> metadata. Files are replaced via write-then-rename, so readers never
// see partial content. Reads are concurrent; writes are serialized.
class CorpusStore {
 public:
  // Creates the directory when missing. Throws StorageError when the
  // directory or its index cannot be read.
  explicit CorpusStore(std::filesystem::path directory);

  CorpusStore(const CorpusStore &) = delete;
  CorpusStore &operator=(const CorpusStore &) = delete;

  // Returns the case id. Re-ingesting text with the same normalized form
  // keeps the id and stored text and replaces the metadata.
  std::string Ingest(std::string_view raw_text, const CaseMetadata &metadata);

  // Throws NotFoundError for unknown or malformed ids.
  CaseDocument Get(std::string_view id) const;
  bool Contains(std::string_view id) const;

  QueryPage Query(const QueryFilter &filter) const;

  size_t size() const;
  // All ids in ascending order.
  std::vector<std::string> Ids() const;

  // Gold summaries live next to case files as <id>.gold.txt.
  void PutGoldSummary(std::string_view id, std::string_view text);
  std::optional<std::string> GoldSummary(std::string_view id) const;

  const std::filesystem::path &directory() const { return directory_; }

 private:
  void WriteIndexLocked() const;
  std::filesystem::path CasePath(std::string_view id) const;

  std::filesystem::path directory_;
  std::map<std::string, CaseMetadata> index_;
  mutable std::shared_mutex mutex_;
};

}  // namespace lexsumm

#endif  // LEXSUMM_CORPUS_STORE_H_
