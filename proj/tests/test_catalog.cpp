#include <doctest.h>

#include "superlax/catalog.hpp"
#include "superlax/serialize.hpp"

using namespace superlax;

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("app4.*", "app4.aa"));
  CHECK_FALSE(glob_match("app4.*", "app3.chain"));
  CHECK(glob_match("susy.nilpotent", "susy.nilpotent"));
  CHECK_FALSE(glob_match("susy.nilpotent", "susy.nil"));
  CHECK(glob_match("*.ladder*", "cal.ladder-ts"));
}

TEST_CASE("the app4 family has five entries") {
  int count = 0;
  for (const auto& info : identity_catalog())
    if (glob_match("app4.*", info.id)) ++count;
  CHECK(count == 5);
  ModelSpec spec = ModelSpec::make(Model::hs, 2);
  SuiteReport report = run_suite(spec, "app4.*");
  CHECK(report.entries.size() == 5);
  CHECK(report.all_passed());
  CHECK(report.count(RunStatus::pass) == 5);
}

TEST_CASE("ladder identity passes for the oscillator model") {
  ModelSpec spec = ModelSpec::make(Model::calogero, 2);
  ReportEntry e = run_identity(spec, "cal.ladder");
  CHECK(e.status == RunStatus::pass);
  CHECK(e.residual.empty());
}

TEST_CASE("total-sum identity is exact for the rational model") {
  ModelSpec spec = ModelSpec::make(Model::free_calogero, 2);
  ReportEntry e = run_identity(spec, "lax.ts2");
  CHECK(e.status == RunStatus::pass);
  CHECK(e.constant == "(0)/(1)");
}

TEST_CASE("total-sum identity reports the discovered constant for ts") {
  ModelSpec spec = ModelSpec::make(Model::ts, 2);
  ReportEntry e = run_identity(spec, "lax.ts2");
  CHECK(e.status == RunStatus::pass);
  CHECK(e.constant == "(0)/(1)");
  // forcing exact mode also passes here, since the constant vanishes
  ReportEntry forced = run_identity(spec, "lax.ts2", CompareMode::exact);
  CHECK(forced.status == RunStatus::pass);
}

TEST_CASE("oscillator total sums report the spectral shift") {
  ModelSpec spec = ModelSpec::make(Model::calogero, 3);
  ReportEntry e = run_identity(spec, "cal.ts12");
  CHECK(e.status == RunStatus::pass);
  // 2w(1 + (N-1)(N l + 1)) at N=3: 12 l w + 6 w
  CHECK(e.constant == "(12*l*w + 6*w)/(1)");
}

TEST_CASE("inapplicable identities are skipped with a reason") {
  ModelSpec ts = ModelSpec::make(Model::ts, 2);
  ReportEntry e = run_identity(ts, "cal.ladder");
  CHECK(e.status == RunStatus::skipped);
  CHECK(!e.note.empty());
  ModelSpec cal = ModelSpec::make(Model::calogero, 2);
  CHECK(run_identity(cal, "lax.commute").status == RunStatus::skipped);
  CHECK(run_identity(cal, "bonus.involution").status == RunStatus::skipped);
  CHECK_THROWS_AS(run_identity(cal, "no.such.identity"), Error);
}

TEST_CASE("full two-particle suites pass for every model") {
  for (auto model :
       {Model::free_calogero, Model::calogero, Model::ts, Model::hs}) {
    ModelSpec spec = ModelSpec::make(model, 2);
    SuiteReport report = run_suite(spec, "*", std::nullopt, 2);
    CHECK(report.all_passed());
    CHECK(report.count(RunStatus::fail) == 0);
    // entries arrive sorted by identity id
    for (std::size_t i = 1; i < report.entries.size(); ++i)
      CHECK(report.entries[i - 1].identity < report.entries[i].identity);
  }
}

TEST_CASE("spectrum ladder at n=2") {
  SpectrumReport report = spectrum_demo(2, 2);
  CHECK(report.all_passed());
  // E_gs = w(N + l N(N-1)) at N=2: 2lw + 2w
  CHECK(report.ground_energy == "(2*l*w + 2*w)/(1)");
  REQUIRE(report.lines.size() == 3);
  CHECK(report.lines[0].eigenvalue == "(2*l*w + 2*w)/(1)");
  CHECK(report.lines[1].eigenvalue == "(2*l*w + 4*w)/(1)");
  CHECK(report.lines[2].eigenvalue == "(2*l*w + 6*w)/(1)");
  CHECK_THROWS_AS(spectrum_demo(5, 1), Error);
  CHECK_THROWS_AS(spectrum_demo(2, 9), Error);
}

TEST_CASE("json report carries the schema fields") {
  ModelSpec spec = ModelSpec::make(Model::free_calogero, 2);
  SuiteReport report = run_suite(spec, "susy.nilpotent");
  std::string json = to_json(report, true);
  CHECK(json.find("\"identity\": \"susy.nilpotent\"") != std::string::npos);
  CHECK(json.find("\"model\": \"free-calogero\"") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(json.find("\"millis\"") != std::string::npos);
  std::string stripped = to_json(report, false);
  CHECK(stripped.find("\"millis\"") == std::string::npos);
}
