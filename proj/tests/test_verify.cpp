#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "scarf/error.hpp"
#include "scarf/verify.hpp"

using namespace scarf;
using nlohmann::json;

TEST_CASE("suite names") {
  const auto& names = verify::suite_names();
  CHECK(names.size() == 8);
  CHECK(std::find(names.begin(), names.end(), "worked-examples") != names.end());
  CHECK_THROWS_AS(verify::run_suite("nope"), Error);
}

TEST_CASE("worked examples pass, sorted by name, with anchors") {
  const auto r = verify::run_suite("worked-examples");
  CHECK(r.ok());
  CHECK(r.count(verify::CaseStatus::skipped) == 0);
  CHECK(r.cases.size() == 11);
  CHECK(std::is_sorted(r.cases.begin(), r.cases.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  for (const auto& c : r.cases) {
    CAPTURE(c.name);
    CAPTURE(c.observed);
    CHECK(c.status == verify::CaseStatus::pass);
    CHECK_FALSE(c.anchor.empty());
  }
}

TEST_CASE("a spent budget records skips instead of truncating") {
  const auto r = verify::run_suite("edge-ideal-sweep", 1e-9);
  CHECK(r.count(verify::CaseStatus::skipped) > 0);
  for (const auto& c : r.cases) {
    if (c.status == verify::CaseStatus::skipped) CHECK_FALSE(c.skip_reason.empty());
  }
  CHECK(r.ok());
}

TEST_CASE("JSON report carries seed, budget and per-case fields") {
  const auto r = verify::run_suite("worked-examples", 0.0, 17);
  const auto j = json::parse(verify::report_to_json(r));
  CHECK(j["suite"] == "worked-examples");
  CHECK(j["seed"] == 17);
  CHECK(j["cases"].size() == r.cases.size());
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("status"));
    CHECK(c.contains("milliseconds"));
  }
  CHECK(verify::report_to_text(r).find("worked-examples") != std::string::npos);
}

TEST_CASE("seeded suites are deterministic") {
  const auto a = verify::run_suite("join-induced", 0.0, 5);
  const auto b = verify::run_suite("join-induced", 0.0, 5);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].name == b.cases[i].name);
    CHECK(a.cases[i].input == b.cases[i].input);
    CHECK(a.cases[i].status == b.cases[i].status);
  }
  CHECK(a.ok());
}
