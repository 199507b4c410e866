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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <thread>
#include <vector>

#include "lexsumm/corpus_store.h"
#include "lexsumm/error.h"
#include "test_support.h"

namespace lexsumm {
namespace {

using testing::TempDir;

CaseMetadata Meta(std::string title, std::string jurisdiction,
                  std::string subject, Date date) {
  return {std::move(title), "TAND", std::move(jurisdiction), std::move(subject),
          date};
}

TEST_CASE("Date") {
  CHECK(Date::Parse("2021-03-09") == Date(2021, 3, 9));
  CHECK(Date(2021, 3, 9).ToString() == "2021-03-09");
  CHECK(Date::Parse("2020-02-29").day() == 29);
  CHECK_THROWS_AS(Date::Parse("2021-02-29"), ValidationError);
  CHECK_THROWS_AS(Date::Parse("2020-13-01"), ValidationError);
  CHECK_THROWS_AS(Date::Parse("2020-1-01"), ValidationError);
  CHECK_THROWS_AS(Date::Parse("2020-01-01x"), ValidationError);
  CHECK_THROWS_AS(Date::Parse(""), ValidationError);
  CHECK_THROWS_AS(Date(2020, 4, 31), ValidationError);
  CHECK(Date(2020, 1, 2) < Date(2020, 2, 1));
  CHECK(Date(2019, 12, 31) < Date(2020, 1, 1));
}

TEST_CASE("Case ids") {
  const auto id = CaseIdForText("Bản án số 1.");
  CHECK(IsValidCaseId(id));
  // Known SHA-256 of the empty string.
  CHECK(CaseIdForText("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(CaseIdForText("a\r\nb  c") == CaseIdForText("a\nb c"));
  CHECK(CaseIdForText("a") != CaseIdForText("b"));
  CHECK_FALSE(IsValidCaseId("../etc/passwd"));
  CHECK_FALSE(IsValidCaseId(std::string(64, 'A')));
  CHECK_FALSE(IsValidCaseId(id.substr(1)));
}

TEST_CASE("Metadata JSON") {
  const auto m = Meta("Vay tài sản", "Hà Nội", "Dân sự", Date(2021, 5, 1));
  CHECK(MetadataFromJson(MetadataToJson(m)) == m);
  CHECK_THROWS_AS(MetadataFromJson(nlohmann::json::array()), ValidationError);
  CHECK_THROWS_AS(MetadataFromJson({{"decision_date", "2021-01-01"}}),
                  ValidationError);
  CHECK_THROWS_AS(MetadataFromJson({{"title", ""}, {"decision_date", "2021-01-01"}}),
                  ValidationError);
  CHECK_THROWS_AS(MetadataFromJson({{"title", "x"}}), ValidationError);
  CHECK_THROWS_AS(MetadataFromJson({{"title", 3}, {"decision_date", "2021-01-01"}}),
                  ValidationError);
  const auto minimal =
      MetadataFromJson({{"title", "x"}, {"decision_date", "2021-01-01"}});
  CHECK(minimal.court.empty());

  const CaseDocument doc{"abc", m, "Nội dung", "2026-01-01T00:00:00Z"};
  CHECK(DocumentFromJson(DocumentToJson(doc)) == doc);
}

TEST_CASE("Ingest and Get") {
  TempDir dir("store");
  CorpusStore store(dir.path());
  const auto meta = Meta("A", "Hà Nội", "Dân sự", Date(2021, 1, 1));

  const auto id = store.Ingest("Bản án A.", meta);
  CHECK(store.size() == 1);
  CHECK(store.Ingest("Bản án A.", meta) == id);
  CHECK(store.size() == 1);
  const auto id2 = store.Ingest("Bản án B.", meta);
  CHECK(id2 != id);
  CHECK(store.size() == 2);
  const std::set<std::string> ids = {id, id2};
  CHECK(store.Ids() == std::vector<std::string>(ids.begin(), ids.end()));

  const auto doc = store.Get(id);
  CHECK(doc.id == id);
  CHECK(doc.raw_text == "Bản án A.");
  CHECK(doc.metadata == meta);
  CHECK_FALSE(doc.ingested_at.empty());

  CHECK_THROWS_AS(store.Ingest("  \n\t ", meta), ValidationError);
  CHECK_THROWS_AS(store.Ingest("", meta), ValidationError);
  CHECK_THROWS_AS(store.Ingest("x", Meta("", "", "", Date())), ValidationError);
  CHECK_THROWS_AS(store.Get(std::string(64, '0')), NotFoundError);
  CHECK_THROWS_AS(store.Get("../../etc/passwd"), NotFoundError);
  CHECK_FALSE(store.Contains(std::string(64, '0')));
  CHECK(store.Contains(id));
}

TEST_CASE("Re-ingest replaces metadata but keeps the stored text") {
  TempDir dir("reingest");
  CorpusStore store(dir.path());
  const auto id = store.Ingest("Bản án\r\nA.", Meta("A", "", "", Date(2020, 1, 1)));
  const auto newer = Meta("A2", "Huế", "", Date(2020, 2, 1));
  CHECK(store.Ingest("Bản án\nA.", newer) == id);
  const auto doc = store.Get(id);
  CHECK(doc.metadata == newer);
  CHECK(doc.raw_text == "Bản án\r\nA.");
}

TEST_CASE("Reopen sees every completed write") {
  TempDir dir("reopen");
  std::string id;
  const auto meta = Meta("A", "Đà Nẵng", "Hình sự", Date(2022, 6, 1));
  {
    CorpusStore store(dir.path());
    id = store.Ingest("Bản án số 7.", meta);
    store.PutGoldSummary(id, "Tóm tắt.");
  }
  CorpusStore reopened(dir.path());
  CHECK(reopened.size() == 1);
  CHECK(reopened.Get(id).metadata == meta);
  CHECK(reopened.GoldSummary(id) == "Tóm tắt.");
  CHECK(reopened.GoldSummary(std::string(64, 'f')) == std::nullopt);
  CHECK_THROWS_AS(reopened.PutGoldSummary(std::string(64, 'f'), "x"),
                  NotFoundError);
  // No temporary files are left behind.
  for (const auto &entry : std::filesystem::directory_iterator(dir.path())) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }
}

TEST_CASE("Corrupt index is a storage error") {
  TempDir dir("corrupt");
  {
    std::ofstream(dir.path() / "index.json") << "{not json";
  }
  CHECK_THROWS_AS(CorpusStore(dir.path()), StorageError);
}

TEST_CASE("Query examples") {
  TempDir dir("query");
  CorpusStore store(dir.path());
  CHECK(store.Query({}).items.empty());
  CHECK(store.Query({}).total == 0);

  const auto a = store.Ingest("A.", Meta("A", "Hà Nội", "Dân sự", Date(2020, 1, 1)));
  const auto b = store.Ingest("B.", Meta("B", "Huế", "Hình sự", Date(2022, 1, 1)));
  const auto c = store.Ingest("C.", Meta("C", "Cần Thơ", "Dân sự", Date(2021, 1, 1)));

  QueryFilter by_place;
  by_place.jurisdiction = "Huế";
  const auto one = store.Query(by_place);
  REQUIRE(one.items.size() == 1);
  CHECK(one.total == 1);
  CHECK(one.items[0].id == b);

  by_place.jurisdiction = "huế";
  CHECK(store.Query(by_place).total == 1);
  by_place.jurisdiction = "Hue";
  CHECK(store.Query(by_place).total == 0);

  const auto all = store.Query({});
  REQUIRE(all.items.size() == 3);
  CHECK(all.items[0].id == b);
  CHECK(all.items[1].id == c);
  CHECK(all.items[2].id == a);

  QueryFilter beyond;
  beyond.page = 2;
  beyond.page_size = 3;
  const auto empty = store.Query(beyond);
  CHECK(empty.items.empty());
  CHECK(empty.total == 3);
  CHECK(empty.page == 2);

  QueryFilter dated;
  dated.from = Date(2021, 1, 1);
  dated.to = Date(2021, 12, 31);
  CHECK(store.Query(dated).total == 1);

  QueryFilter bad;
  bad.from = Date(2022, 1, 1);
  bad.to = Date(2021, 1, 1);
  CHECK_THROWS_AS(store.Query(bad), ValidationError);
  bad = {};
  bad.page = 0;
  CHECK_THROWS_AS(store.Query(bad), ValidationError);
  bad = {};
  bad.page_size = 0;
  CHECK_THROWS_AS(store.Query(bad), ValidationError);
}

TEST_CASE("Randomized filters return exactly the matching documents") {
  TempDir dir("random");
  CorpusStore store(dir.path());
  std::mt19937_64 rng(101);
  const std::vector<std::string> places = {"Hà Nội", "Huế", "Cần Thơ"};
  const std::vector<std::string> subjects = {"Dân sự", "Hình sự"};
  std::uniform_int_distribution<size_t> place(0, places.size() - 1);
  std::uniform_int_distribution<size_t> subject(0, subjects.size() - 1);
  std::uniform_int_distribution<int> year(2018, 2023);
  std::uniform_int_distribution<unsigned> month(1, 12);
  std::map<std::string, CaseMetadata> all;
  for (int i = 0; i < 40; ++i) {
    const auto meta = Meta("Vụ " + std::to_string(i), places[place(rng)],
                           subjects[subject(rng)], Date(year(rng), month(rng), 1));
    all[store.Ingest("Bản án " + std::to_string(i) + ".", meta)] = meta;
  }
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<size_t> page_size(1, 15);
  for (int trial = 0; trial < 200; ++trial) {
    QueryFilter f;
    if (coin(rng)) f.jurisdiction = places[place(rng)];
    if (coin(rng)) f.subject_matter = subjects[subject(rng)];
    if (coin(rng)) f.from = Date(year(rng), 1, 1);
    if (coin(rng)) f.to = Date(f.from ? f.from->year() + 2 : year(rng), 12, 31);
    f.page_size = page_size(rng);

    size_t expected = 0;
    for (const auto &[id, m] : all) {
      const bool ok = (!f.jurisdiction || m.jurisdiction == *f.jurisdiction) &&
                      (!f.subject_matter || m.subject_matter == *f.subject_matter) &&
                      (!f.from || !(m.decision_date < *f.from)) &&
                      (!f.to || !(*f.to < m.decision_date));
      expected += ok;
    }
    std::vector<CaseListing> collected;
    for (f.page = 1;; ++f.page) {
      const auto page = store.Query(f);
      REQUIRE(page.total == expected);
      REQUIRE(page.items.size() <= f.page_size);
      if (page.items.empty()) break;
      collected.insert(collected.end(), page.items.begin(), page.items.end());
    }
    REQUIRE(collected.size() == expected);
    for (size_t i = 0; i < collected.size(); ++i) {
      REQUIRE(all.at(collected[i].id) == collected[i].metadata);
      REQUIRE(f.Matches(collected[i].metadata));
      if (i > 0) {
        const auto &prev = collected[i - 1].metadata.decision_date;
        const auto &cur = collected[i].metadata.decision_date;
        REQUIRE((cur < prev || (cur == prev && collected[i - 1].id < collected[i].id)));
      }
    }
  }
}

TEST_CASE("Concurrent ingest and reads") {
  TempDir dir("concurrent");
  CorpusStore store(dir.path());
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&store, t] {
      for (int i = 0; i < 10; ++i) {
        const auto id = store.Ingest(
            "Luồng " + std::to_string(t) + " bản án " + std::to_string(i) + ".",
            Meta("T", "Huế", "Dân sự", Date(2020, 1, 1)));
        store.Get(id);
        store.Query({});
      }
    });
  }
  for (auto &thread : threads) thread.join();
  CHECK(store.size() == 40);
  CHECK(CorpusStore(dir.path()).size() == 40);
}

}  // namespace
}  // namespace lexsumm
