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

#include "lexsumm/corpus_store.h"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>

#include "lexsumm/error.h"
#include "lexsumm/text_processing.h"

namespace lexsumm {
namespace {

using nlohmann::json;

constexpr int kIndexVersion = 1;
constexpr const char *kIndexFile = "index.json";

bool IsLeapYear(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

unsigned DaysInMonth(int year, unsigned month) {
  static constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30,
                                       31, 31, 30, 31, 30, 31};
  if (month == 2 && IsLeapYear(year)) return 29;
  return kDays[month - 1];
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot read " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

// Replaces `path` atomically with `contents`.
void WriteFileAtomic(const std::filesystem::path &path,
                     std::string_view contents) {
  static std::atomic<unsigned long> counter{0};
  std::filesystem::path temp = path;
  temp += ".tmp" + std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw StorageError("cannot write " + temp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw StorageError("failed writing " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw StorageError("cannot replace " + path.string());
  }
}

std::string RequireString(const json &object, const char *field) {
  if (!object.contains(field) || !object.at(field).is_string()) {
    throw ValidationError(std::string("field \"") + field +
                          "\" must be a string");
  }
  return object.at(field).get<std::string>();
}

std::string OptionalString(const json &object, const char *field) {
  if (!object.contains(field) || object.at(field).is_null()) return {};
  if (!object.at(field).is_string()) {
    throw ValidationError(std::string("field \"") + field +
                          "\" must be a string");
  }
  return object.at(field).get<std::string>();
}

}  // namespace

Date::Date(int year, unsigned month, unsigned day)
    : year_(year), month_(month), day_(day) {
  if (year < 1 || year > 9999 || month < 1 || month > 12 || day < 1 ||
      day > DaysInMonth(year, month)) {
    throw ValidationError("invalid calendar date");
  }
}

Date Date::Parse(std::string_view text) {
  auto digits = [&](size_t from, size_t count) {
    int value = 0;
    for (size_t i = from; i < from + count; ++i) {
      if (text[i] < '0' || text[i] > '9') return -1;
      value = value * 10 + (text[i] - '0');
    }
    return value;
  };
  if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
    const int year = digits(0, 4);
    const int month = digits(5, 2);
    const int day = digits(8, 2);
    if (year > 0 && month > 0 && day > 0) {
      try {
        return Date(year, static_cast<unsigned>(month),
                    static_cast<unsigned>(day));
      } catch (const ValidationError &) {
      }
    }
  }
  throw ValidationError("invalid date \"" + std::string(text) +
                        "\", expected YYYY-MM-DD");
}

std::string Date::ToString() const {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02u", year_, month_, day_);
  return buffer;
}

void QueryFilter::Validate() const {
  if (from && to && *from > *to) {
    throw ValidationError("date range start is after its end");
  }
  if (page < 1) throw ValidationError("page must be at least 1");
  if (page_size < 1) throw ValidationError("page_size must be at least 1");
}

bool QueryFilter::Matches(const CaseMetadata &metadata) const {
  if (subject_matter &&
      FoldCase(*subject_matter) != FoldCase(metadata.subject_matter)) {
    return false;
  }
  if (jurisdiction &&
      FoldCase(*jurisdiction) != FoldCase(metadata.jurisdiction)) {
    return false;
  }
  if (from && metadata.decision_date < *from) return false;
  if (to && metadata.decision_date > *to) return false;
  return true;
}

std::string CaseIdForText(std::string_view raw_text) {
  const std::string normalized = NormalizeText(raw_text).text;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(normalized.data(), normalized.size(), digest, &length,
                 EVP_sha256(), nullptr) != 1) {
    throw StorageError("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  id.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    id.push_back(kHex[digest[i] >> 4]);
    id.push_back(kHex[digest[i] & 0xF]);
  }
  return id;
}

bool IsValidCaseId(std::string_view id) {
  return id.size() == 64 &&
         std::all_of(id.begin(), id.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

json MetadataToJson(const CaseMetadata &metadata) {
  return {{"title", metadata.title},
          {"court", metadata.court},
          {"jurisdiction", metadata.jurisdiction},
          {"subject_matter", metadata.subject_matter},
          {"decision_date", metadata.decision_date.ToString()}};
}

CaseMetadata MetadataFromJson(const json &object) {
  if (!object.is_object()) throw ValidationError("metadata must be an object");
  CaseMetadata metadata;
  metadata.title = RequireString(object, "title");
  if (metadata.title.empty()) throw ValidationError("title must not be empty");
  metadata.court = OptionalString(object, "court");
  metadata.jurisdiction = OptionalString(object, "jurisdiction");
  metadata.subject_matter = OptionalString(object, "subject_matter");
  metadata.decision_date = Date::Parse(RequireString(object, "decision_date"));
  return metadata;
}

json DocumentToJson(const CaseDocument &document) {
  return {{"id", document.id},
          {"metadata", MetadataToJson(document.metadata)},
          {"raw_text", document.raw_text},
          {"ingested_at", document.ingested_at}};
}

CaseDocument DocumentFromJson(const json &object) {
  if (!object.is_object()) throw ValidationError("case must be an object");
  CaseDocument document;
  document.id = RequireString(object, "id");
  if (!object.contains("metadata")) throw ValidationError("missing metadata");
  document.metadata = MetadataFromJson(object.at("metadata"));
  document.raw_text = RequireString(object, "raw_text");
  document.ingested_at = OptionalString(object, "ingested_at");
  return document;
}

CorpusStore::CorpusStore(std::filesystem::path directory)
    : directory_(std::move(directory)) {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec || !std::filesystem::is_directory(directory_)) {
    throw StorageError("cannot open store directory " + directory_.string());
  }
  const auto index_path = directory_ / kIndexFile;
  if (!std::filesystem::exists(index_path)) return;
  try {
    const json index = json::parse(ReadFile(index_path));
    for (const auto &[id, metadata] : index.at("entries").items()) {
      index_[id] = MetadataFromJson(metadata);
    }
  } catch (const json::exception &e) {
    throw StorageError("corrupt index " + index_path.string() + ": " + e.what());
  } catch (const ValidationError &e) {
    throw StorageError("corrupt index " + index_path.string() + ": " + e.what());
  }
}

std::filesystem::path CorpusStore::CasePath(std::string_view id) const {
  return directory_ / (std::string(id) + ".json");
}

void CorpusStore::WriteIndexLocked() const {
  json entries = json::object();
  for (const auto &[id, metadata] : index_) entries[id] = MetadataToJson(metadata);
  const json index = {{"version", kIndexVersion}, {"entries", std::move(entries)}};
  WriteFileAtomic(directory_ / kIndexFile, index.dump(2) + "\n");
}

std::string CorpusStore::Ingest(std::string_view raw_text,
                                const CaseMetadata &metadata) {
  if (NormalizeText(raw_text).text.find_first_not_of(" \n") ==
      std::string::npos) {
    throw ValidationError("case text is empty");
  }
  if (metadata.title.empty()) throw ValidationError("title must not be empty");
  const std::string id = CaseIdForText(raw_text);

  std::unique_lock lock(mutex_);
  CaseDocument document;
  const auto path = CasePath(id);
  if (index_.count(id) > 0 && std::filesystem::exists(path)) {
    document = DocumentFromJson(json::parse(ReadFile(path)));
  } else {
    document.id = id;
    document.raw_text.assign(raw_text);
    document.ingested_at = UtcTimestamp();
  }
  document.metadata = metadata;
  WriteFileAtomic(path, DocumentToJson(document).dump(2) + "\n");
  const auto previous = index_.find(id);
  const std::optional<CaseMetadata> old =
      previous == index_.end() ? std::nullopt
                               : std::optional<CaseMetadata>(previous->second);
  index_[id] = metadata;
  try {
    WriteIndexLocked();
  } catch (...) {
    if (old) {
      index_[id] = *old;
    } else {
      index_.erase(id);
    }
    throw;
  }
  return id;
}

CaseDocument CorpusStore::Get(std::string_view id) const {
  if (!IsValidCaseId(id)) {
    throw NotFoundError("no case with id \"" + std::string(id) + "\"");
  }
  std::shared_lock lock(mutex_);
  if (index_.count(std::string(id)) == 0) {
    throw NotFoundError("no case with id \"" + std::string(id) + "\"");
  }
  try {
    return DocumentFromJson(json::parse(ReadFile(CasePath(id))));
  } catch (const json::exception &e) {
    throw StorageError("corrupt case file for " + std::string(id));
  } catch (const ValidationError &e) {
    throw StorageError("corrupt case file for " + std::string(id) + ": " +
                       e.what());
  }
}

bool CorpusStore::Contains(std::string_view id) const {
  std::shared_lock lock(mutex_);
  return index_.count(std::string(id)) > 0;
}

QueryPage CorpusStore::Query(const QueryFilter &filter) const {
  filter.Validate();
  std::vector<CaseListing> matching;
  {
    std::shared_lock lock(mutex_);
    for (const auto &[id, metadata] : index_) {
      if (filter.Matches(metadata)) matching.push_back({id, metadata});
    }
  }
  std::sort(matching.begin(), matching.end(),
            [](const CaseListing &a, const CaseListing &b) {
              if (a.metadata.decision_date != b.metadata.decision_date) {
                return a.metadata.decision_date > b.metadata.decision_date;
              }
              return a.id < b.id;
            });
  QueryPage page;
  page.total = matching.size();
  page.page = filter.page;
  page.page_size = filter.page_size;
  const size_t page_count =
      (matching.size() + filter.page_size - 1) / filter.page_size;
  if (filter.page <= page_count) {
    const size_t begin = (filter.page - 1) * filter.page_size;
    const size_t end = std::min(matching.size(), begin + filter.page_size);
    page.items.assign(matching.begin() + static_cast<std::ptrdiff_t>(begin),
                      matching.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return page;
}

size_t CorpusStore::size() const {
  std::shared_lock lock(mutex_);
  return index_.size();
}

std::vector<std::string> CorpusStore::Ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> ids;
  ids.reserve(index_.size());
  for (const auto &[id, metadata] : index_) ids.push_back(id);
  return ids;
}

void CorpusStore::PutGoldSummary(std::string_view id, std::string_view text) {
  if (!IsValidCaseId(id)) {
    throw NotFoundError("no case with id \"" + std::string(id) + "\"");
  }
  std::unique_lock lock(mutex_);
  if (index_.count(std::string(id)) == 0) {
    throw NotFoundError("no case with id \"" + std::string(id) + "\"");
  }
  WriteFileAtomic(directory_ / (std::string(id) + ".gold.txt"), text);
}

std::optional<std::string> CorpusStore::GoldSummary(std::string_view id) const {
  if (!IsValidCaseId(id)) return std::nullopt;
  std::shared_lock lock(mutex_);
  const auto path = directory_ / (std::string(id) + ".gold.txt");
  if (!std::filesystem::exists(path)) return std::nullopt;
  return ReadFile(path);
}

}  // namespace lexsumm
