#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orelab/errors.hpp"
#include "orelab/suites.hpp"

using namespace orelab;

TEST_CASE("every shipped suite passes at its defaults") {
  for (const auto& name : suite_names()) {
    Report r = run_suite(name);
    CAPTURE(name);
    CHECK(r.passed());
    CHECK(r.suite() == name);
  }
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("lemma9_99"), Error);
}

TEST_CASE("reports carry the documented JSON shape") {
  Report r = run_suite("weyl");
  nlohmann::json j = r.to_json();
  REQUIRE(j.contains("suite"));
  REQUIRE(j.contains("seed"));
  REQUIRE(j.contains("parameters"));
  REQUIRE(j.contains("checks"));
  CHECK(j["suite"] == "weyl");
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK((c["status"] == "pass" || c["status"] == "fail"));
  }
}

TEST_CASE("parameter overrides are honored") {
  SuiteParams p;
  p.base = "Z/4";
  p.window = 16;
  Report r = run_suite("lemma1_3", p);
  CHECK(r.passed());
  CHECK(r.to_json()["parameters"]["window"] == 16);

  SuiteParams q;
  q.window = 8;
  CHECK(run_suite("prop1_19", q).passed());

  SuiteParams s;
  s.seed = 12345;
  s.count = 20;
  CHECK(run_suite("thm0_4", s).passed());
  CHECK(run_suite("lemma1_17", s).passed());
}

TEST_CASE("suite output is deterministic for a fixed seed") {
  for (const auto& name : {"lemma1_3", "prop0_5", "ex1_14"}) {
    std::string a = run_suite(name).to_json().dump();
    std::string b = run_suite(name).to_json().dump();
    CHECK(a == b);
  }
}
