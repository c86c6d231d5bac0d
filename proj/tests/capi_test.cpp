// Copyright 2026 The refex Authors.
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
//
// Exercises the shared library strictly through its C surface.

#include "refex/refex.h"

#include <cstring>
#include <memory>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

std::string data_path(const std::string& name) {
  return std::string(REFEX_DATA_DIR) + "/" + name;
}

struct KbDeleter {
  void operator()(refex_kb* kb) const { refex_kb_free(kb); }
};
struct GenreDeleter {
  void operator()(refex_genre* genre) const { refex_genre_free(genre); }
};
struct ReportDeleter {
  void operator()(refex_report* report) const { refex_report_free(report); }
};

using KbHandle = std::unique_ptr<refex_kb, KbDeleter>;
using GenreHandle = std::unique_ptr<refex_genre, GenreDeleter>;
using ReportHandle = std::unique_ptr<refex_report, ReportDeleter>;

KbHandle load_kb(const std::string& path) {
  refex_kb* kb = nullptr;
  REQUIRE(refex_kb_load_file(path.c_str(), &kb) == REFEX_OK);
  return KbHandle(kb);
}

json parse_report(const refex_report* report) {
  REQUIRE(report != nullptr);
  const char* text = refex_report_json(report);
  REQUIRE(text != nullptr);
  return json::parse(text);
}

constexpr const char* kPensContext[] = {"pen1", "pen2"};

}  // namespace

TEST_CASE("version and status names are exposed") {
  CHECK(std::string(refex_version()) == "0.1.0");
  CHECK(std::string(refex_status_name(REFEX_OK)) == "Ok");
  CHECK(std::string(refex_status_name(REFEX_ERR_PARSE)) == "ParseError");
  CHECK(std::string(refex_status_name(
            REFEX_ERR_NO_DISTINGUISHING_DESCRIPTION)) ==
        "NoDistinguishingDescription");
  CHECK(std::string(refex_status_name(static_cast<refex_status>(99))) ==
        "Unknown");
}

TEST_CASE("knowledge bases load through the C surface") {
  refex_kb* kb = nullptr;
  CHECK(refex_kb_parse(R"({"entities": {"a": {"type": "pen"}}})", &kb) ==
        REFEX_OK);
  REQUIRE(kb != nullptr);
  CHECK(refex_kb_entity_count(kb) == 1);
  refex_kb_free(kb);

  kb = nullptr;
  CHECK(refex_kb_parse("{\"entities\": 3}", &kb) == REFEX_ERR_PARSE);
  CHECK(kb == nullptr);
  CHECK(std::strlen(refex_last_error()) > 0);

  CHECK(refex_kb_parse(
            R"({"entities": {"a": {"x": "1"}, "a": {"x": "2"}}})", &kb) ==
        REFEX_ERR_DUPLICATE_ENTITY);
  CHECK(refex_kb_load_file("/nonexistent.json", &kb) == REFEX_ERR_IO);
  CHECK(refex_kb_parse(nullptr, &kb) == REFEX_ERR_INVALID_ARGUMENT);
  CHECK(refex_kb_parse("{}", nullptr) == REFEX_ERR_INVALID_ARGUMENT);

  KbHandle pens = load_kb(data_path("kb/pens.json"));
  CHECK(refex_kb_entity_count(pens.get()) == 2);
  CHECK(refex_kb_entity_count(nullptr) == 0);
}

TEST_CASE("genre handles load, resolve builtins, and report names") {
  refex_genre* genre = nullptr;
  REQUIRE(refex_genre_builtin("inventory", &genre) == REFEX_OK);
  GenreHandle inventory(genre);
  CHECK(std::string(refex_genre_name(inventory.get())) == "inventory");

  genre = nullptr;
  CHECK(refex_genre_builtin("operatic", &genre) ==
        REFEX_ERR_INVALID_ARGUMENT);
  CHECK(genre == nullptr);

  CHECK(refex_genre_parse(R"({"name": "x"})", &genre) == REFEX_ERR_PARSE);
  REQUIRE(refex_genre_parse(
              R"({"name": "x", "preferred_attributes": ["type"]})",
              &genre) == REFEX_OK);
  GenreHandle custom(genre);
  CHECK(std::string(refex_genre_name(custom.get())) == "x");
  CHECK(refex_genre_load_file("/nonexistent.json", &genre) == REFEX_ERR_IO);
}

TEST_CASE("generation produces a full plan report") {
  KbHandle kb = load_kb(data_path("kb/pens.json"));
  const char* convey[] = {"colour=red"};

  refex_report* raw = nullptr;
  REQUIRE(refex_generate(kb.get(), "pen1", kPensContext, 2,
                         REFEX_STRATEGY_GREEDY, nullptr, convey, 1, 1,
                         &raw) == REFEX_OK);
  ReportHandle report(raw);
  json plan = parse_report(report.get());
  CHECK(plan["description"]["surface"] == "colour=red");
  CHECK(plan["description"]["items"].size() == 1);
  CHECK(plan["goals"].size() == 2);
  CHECK(plan["goals"][0]["kind"] == "Identify");
  CHECK(plan["goals"][0]["satisfied"] == true);
  CHECK(plan["goals"][1]["kind"] == "Convey");
  CHECK(plan["goals"][1]["payload"]["attribute"] == "colour");
  CHECK(plan["verification"]["outcome"] == "UniqueReferent");
  CHECK(plan["attributions"][0]["sources"] ==
        json::array({"Identification", "ConveyGoal"}));
  CHECK(plan["agenda_remaining"].empty());

  // Passing no context ids means the whole knowledge base.
  raw = nullptr;
  REQUIRE(refex_generate(kb.get(), "pen1", nullptr, 0,
                         REFEX_STRATEGY_FULL_BREVITY, nullptr, nullptr, 0, 1,
                         &raw) == REFEX_OK);
  ReportHandle whole(raw);
  CHECK(parse_report(whole.get())["description"]["surface"] == "colour=red");
}

TEST_CASE("generation failures surface as statuses with messages") {
  refex_kb* raw_kb = nullptr;
  REQUIRE(refex_kb_parse(R"({"entities": {
             "e1": {"type": "pen"}, "e2": {"type": "pen"}}})",
                         &raw_kb) == REFEX_OK);
  KbHandle kb(raw_kb);

  refex_report* report = reinterpret_cast<refex_report*>(0x1);
  CHECK(refex_generate(kb.get(), "e1", nullptr, 0, REFEX_STRATEGY_GREEDY,
                       nullptr, nullptr, 0, 1, &report) ==
        REFEX_ERR_NO_DISTINGUISHING_DESCRIPTION);
  CHECK(report == nullptr);
  CHECK(std::string(refex_last_error()).find("e1") != std::string::npos);

  const char* lie[] = {"colour=blue"};
  CHECK(refex_generate(kb.get(), "e1", nullptr, 0, REFEX_STRATEGY_GREEDY,
                       nullptr, lie, 1, 1, &report) ==
        REFEX_ERR_QUALITY_VIOLATION);

  const char* mangled[] = {"colour"};
  CHECK(refex_generate(kb.get(), "e1", nullptr, 0, REFEX_STRATEGY_GREEDY,
                       nullptr, mangled, 1, 1, &report) == REFEX_ERR_PARSE);

  CHECK(refex_generate(kb.get(), "ghost", nullptr, 0, REFEX_STRATEGY_GREEDY,
                       nullptr, nullptr, 0, 1, &report) ==
        REFEX_ERR_UNKNOWN_ENTITY);
  const char* elsewhere[] = {"e2"};
  CHECK(refex_generate(kb.get(), "e1", elsewhere, 1, REFEX_STRATEGY_GREEDY,
                       nullptr, nullptr, 0, 1, &report) ==
        REFEX_ERR_REFERENT_NOT_IN_CONTEXT);
  CHECK(refex_generate(nullptr, "e1", nullptr, 0, REFEX_STRATEGY_GREEDY,
                       nullptr, nullptr, 0, 1, &report) ==
        REFEX_ERR_INVALID_ARGUMENT);
  CHECK(refex_generate(kb.get(), "e1", nullptr, 0,
                       static_cast<refex_strategy>(7), nullptr, nullptr, 0, 1,
                       &report) == REFEX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("interpretation classifies and reports ambiguity") {
  KbHandle kb = load_kb(data_path("kb/pens.json"));

  refex_report* raw = nullptr;
  REQUIRE(refex_interpret(kb.get(), "colour=red", kPensContext, 2, nullptr,
                          &raw) == REFEX_OK);
  ReportHandle resolved(raw);
  json unique = parse_report(resolved.get());
  CHECK(unique["outcome"] == "UniqueReferent");
  CHECK(unique["resolved"] == json::array({"pen1"}));
  CHECK(unique["classifications"].empty());

  raw = nullptr;
  REQUIRE(refex_interpret(kb.get(), "colour=red, type=pen", kPensContext, 2,
                          "pen1", &raw) == REFEX_OK);
  ReportHandle classified(raw);
  json purposes = parse_report(classified.get());
  CHECK(purposes["classifications"].size() == 2);
  CHECK(purposes["classifications"][0]["item"]["attribute"] == "colour");
  CHECK(purposes["classifications"][0]["purpose"] == "Necessary");
  CHECK(purposes["classifications"][1]["purpose"] == "Surplus");

  // An ambiguous description against a referent still reports resolution.
  raw = nullptr;
  CHECK(refex_interpret(kb.get(), "type=pen", kPensContext, 2, "pen1",
                        &raw) == REFEX_ERR_NOT_DISTINGUISHING);
  REQUIRE(raw != nullptr);
  ReportHandle ambiguous(raw);
  json failed = parse_report(ambiguous.get());
  CHECK(failed["outcome"] == "Ambiguous");
  CHECK(failed["resolved"] == json::array({"pen1", "pen2"}));
  CHECK(std::strlen(refex_last_error()) > 0);

  raw = nullptr;
  CHECK(refex_interpret(kb.get(), "colour", kPensContext, 2, nullptr,
                        &raw) == REFEX_ERR_PARSE);
  CHECK(raw == nullptr);
}

TEST_CASE("comparison reports the minimality gap") {
  KbHandle kb = load_kb(data_path("kb/greedy_trap.json"));

  refex_report* raw = nullptr;
  REQUIRE(refex_compare(kb.get(), "target", nullptr, 0, nullptr, 0, 0,
                        &raw) == REFEX_OK);
  ReportHandle report(raw);
  json comparison = parse_report(report.get());

  REQUIRE(comparison["strategies"].size() == 3);
  CHECK(comparison["strategies"][0]["strategy"] == "full-brevity");
  CHECK(comparison["strategies"][0]["ok"] == true);
  CHECK(comparison["strategies"][0]["length"] == 2);
  CHECK(comparison["strategies"][1]["strategy"] == "greedy");
  CHECK(comparison["strategies"][1]["length"] == 3);
  CHECK(comparison["strategies"][2]["strategy"] == "incremental");
  CHECK(comparison["oracle"]["ok"] == true);
  CHECK(comparison["oracle"]["minimal_descriptions"].size() == 1);
  CHECK(comparison["minimality_gap"] == 1);
  CHECK(!comparison["strategies"][0].contains("wall_time_us"));
  CHECK(!comparison["oracle"].contains("wall_time_us"));

  // Deterministic without timings; timinged reports add the fields.
  refex_report* again = nullptr;
  REQUIRE(refex_compare(kb.get(), "target", nullptr, 0, nullptr, 0, 0,
                        &again) == REFEX_OK);
  ReportHandle second(again);
  CHECK(std::string(refex_report_json(report.get())) ==
        std::string(refex_report_json(second.get())));

  refex_report* timed = nullptr;
  REQUIRE(refex_compare(kb.get(), "target", nullptr, 0, nullptr, 0, 1,
                        &timed) == REFEX_OK);
  ReportHandle with_timings(timed);
  json timinged = parse_report(with_timings.get());
  CHECK(timinged["strategies"][0].contains("wall_time_us"));
  CHECK(timinged["oracle"].contains("wall_time_us"));

  // A tiny oracle guard trips only the oracle.
  refex_report* guarded = nullptr;
  REQUIRE(refex_compare(kb.get(), "target", nullptr, 0, nullptr, 2, 0,
                        &guarded) == REFEX_OK);
  ReportHandle small(guarded);
  json capped = parse_report(small.get());
  CHECK(capped["strategies"][0]["ok"] == true);
  CHECK(capped["oracle"]["ok"] == false);
  CHECK(capped["oracle"]["error"] == "InstanceTooLarge");
  CHECK(!capped.contains("minimality_gap"));
}

TEST_CASE("failed strategies are reported, not fatal") {
  refex_kb* raw_kb = nullptr;
  REQUIRE(refex_kb_parse(R"({"entities": {
             "e1": {"type": "pen"}, "e2": {"type": "pen"}}})",
                         &raw_kb) == REFEX_OK);
  KbHandle kb(raw_kb);

  refex_report* raw = nullptr;
  REQUIRE(refex_compare(kb.get(), "e1", nullptr, 0, nullptr, 0, 0, &raw) ==
          REFEX_OK);
  ReportHandle report(raw);
  json comparison = parse_report(report.get());
  for (const auto& strategy : comparison["strategies"]) {
    CHECK(strategy["ok"] == false);
    CHECK(strategy["error"] == "NoDistinguishingDescription");
    CHECK(strategy.contains("message"));
  }
  CHECK(comparison["oracle"]["error"] == "NoDistinguishingDescription");
  CHECK(!comparison.contains("minimality_gap"));
}
