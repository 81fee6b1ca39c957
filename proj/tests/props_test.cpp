#include "lamfam/props.hpp"

#include "doctest.h"
#include "lamfam/serialize.hpp"

using namespace lamfam;

TEST_CASE("suites pass at small bounds") {
  for (auto const& report : {suite_prop1(7), suite_equivalences(8), suite_prop2(8), suite_prop4(8, 2),
                             suite_openness(5, 1), suite_roundtrips(7, 5, 1), suite_generators(2000, 3, 8)}) {
    INFO(to_text(report));
    CHECK(report.pass);
    CHECK(report.failure_count == 0);
    CHECK(report.failures.empty());
    CHECK(report.cases > 0);
  }
}

TEST_CASE("reports carry their parameters") {
  auto const r = suite_prop4(6, 2);
  CHECK(r.name == "prop4");
  REQUIRE(r.parameters.size() == 2);
  CHECK(r.parameters[0] == std::pair<std::string, std::int64_t>{"max_size", 6});
  CHECK(r.parameters[1] == std::pair<std::string, std::int64_t>{"max_m", 2});
  CHECK(to_text(r).rfind("prop4: PASS (", 0) == 0);
}

TEST_CASE("case counts grow with the bound") {
  CHECK(suite_prop2(6).cases < suite_prop2(7).cases);
  CHECK(suite_openness(4, 0).cases < suite_openness(4, 1).cases);
}

TEST_CASE("reports are reproducible") {
  auto const a = to_json(suite_generators(3000, 99, 9)).dump();
  auto const b = to_json(suite_generators(3000, 99, 9)).dump();
  CHECK(a == b);
  CHECK(to_json(suite_openness(5, 1)).dump() == to_json(suite_openness(5, 1)).dump());

  auto const j = to_json(suite_prop1(5));
  CHECK(j["suite"] == "prop1");
  CHECK(j["pass"] == true);
  CHECK(j.contains("cases"));
  CHECK_FALSE(j.contains("duration"));
}

TEST_CASE("default battery") {
  auto const suites = default_suites();
  std::vector<std::string> names;
  for (auto const& s : suites) names.push_back(s.name);
  CHECK(names == std::vector<std::string>{"roundtrips", "equivalences", "prop1", "prop2", "prop4", "openness",
                                          "generators"});
}
