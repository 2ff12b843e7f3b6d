#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>

#include "catalog.hpp"
#include "error.hpp"

using namespace theta2;

TEST_CASE("catalog is well formed") {
  const auto& entries = builtin_catalog();
  std::set<std::string> ids;
  int64_t numeric = 0;
  for (const auto& e : entries) {
    CHECK(e.has_method());
    CHECK(ids.insert(e.id).second);  // unique ids
    CHECK(e.l >= 3);
    CHECK(e.l % 2 == 1);
    if (!e.lhs.empty()) ++numeric;
  }
  CHECK(numeric >= 25);
  // the documented entry points exist
  for (const char* id : {"L5.T4.1", "L9.L6.2", "L7.L5.3", "L11.L7.4",
                         "L3.T2.4", "L9.T6.5b", "L5.UL.q8j0"}) {
    CHECK(std::any_of(entries.begin(), entries.end(),
                      [&](const IdentityEntry& e) { return e.id == id; }));
  }
}

TEST_CASE("catalog parser") {
  auto entries = parse_catalog(
      "# comment\n"
      "entry X.1\n"
      "l 5\n"
      "E 128\n"
      "numeric [1] == [1]\n"
      "anchor demo\n"
      "end\n");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].id == "X.1");
  CHECK(entries[0].E == 128);
  CHECK(entries[0].anchor == "demo");
  CHECK_THROWS_AS(parse_catalog("entry Y\nend\n"), Error);       // no method
  CHECK_THROWS_AS(parse_catalog("l 5\n"), Error);                // outside entry
  CHECK_THROWS_AS(parse_catalog("entry Y\nnumeric [1]\nend\n"), Error);
}

TEST_CASE("single entry run and report schema") {
  VerifyOptions opts;
  opts.id_filter = "L5.T4.1";
  auto sum = run_catalog(builtin_catalog(), opts, RunConfig::defaults());
  REQUIRE(sum.matched == 1);
  CHECK(sum.failed == 0);
  REQUIRE(sum.reports.size() == 1);
  const auto parsed = nlohmann::json::parse(sum.reports[0].to_json());
  CHECK(parsed["id"] == "L5.T4.1");
  CHECK(parsed["method"] == "numeric");
  CHECK(parsed["outcome"] == "pass");
  CHECK(parsed.contains("witness"));
  CHECK(parsed["ms"].is_number());
}

TEST_CASE("l=3 subset passes") {
  VerifyOptions opts;
  opts.l_filter = 3;
  auto sum = run_catalog(builtin_catalog(), opts, RunConfig::defaults());
  CHECK(sum.matched >= 6);
  CHECK(sum.failed == 0);
  CHECK(sum.budget_exceeded == 0);
}

TEST_CASE("prefix filter and certificates for l=5") {
  VerifyOptions opts;
  opts.id_filter = "L5.T4.2*";
  auto sum = run_catalog(builtin_catalog(), opts, RunConfig::defaults());
  CHECK(sum.matched == 5);  // three numeric parts plus two certificates
  CHECK(sum.failed == 0);
}

TEST_CASE("ladder entry passes") {
  VerifyOptions opts;
  opts.id_filter = "L5.UL.q8j0";
  auto sum = run_catalog(builtin_catalog(), opts, RunConfig::defaults());
  REQUIRE(sum.matched == 1);
  CHECK(sum.failed == 0);
  CHECK(sum.reports[0].method == "ladder+groebner");
}

TEST_CASE("unknown filter matches nothing") {
  VerifyOptions opts;
  opts.id_filter = "no.such.entry";
  auto sum = run_catalog(builtin_catalog(), opts, RunConfig::defaults());
  CHECK(sum.matched == 0);
  CHECK(sum.reports.empty());
}

TEST_CASE("too small a window is an honest failure") {
  VerifyOptions opts;
  opts.id_filter = "L3.T2.4";
  opts.E_override = 256;  // far fewer than 64 nonzero coefficients
  auto sum = run_catalog(builtin_catalog(), opts, RunConfig::defaults());
  REQUIRE(sum.matched == 1);
  CHECK(sum.failed == 1);
  CHECK(sum.reports[0].witness.find("nonzero") != std::string::npos);
}

TEST_CASE("budget exhaustion is reported, never passed") {
  VerifyOptions opts;
  opts.id_filter = "L9.T6.5.g";
  RunConfig cfg = RunConfig::defaults();
  cfg.pair_budget = 3;
  auto sum = run_catalog(builtin_catalog(), opts, cfg);
  REQUIRE(sum.matched == 1);
  CHECK(sum.budget_exceeded == 1);
  CHECK(sum.reports[0].outcome == "budget-exceeded");
}

TEST_CASE("slow entries are excluded by default and selectable") {
  VerifyOptions opts;
  opts.id_filter = "L15.UL.q64j16";
  auto sum = run_catalog(builtin_catalog(), opts, RunConfig::defaults());
  CHECK(sum.matched == 0);
  // present in the catalog, just flagged
  const auto& entries = builtin_catalog();
  CHECK(std::any_of(entries.begin(), entries.end(), [](const IdentityEntry& e) {
    return e.id == "L15.UL.q64j16" && e.slow;
  }));
}
