#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "walg/errors.hpp"
#include "walg/suites.hpp"

using namespace walg;

TEST_CASE("suite catalog") {
  const auto& names = suite_names();
  REQUIRE(names.size() == 8);
  CHECK(names[0] == "branching");
  CHECK(names[3] == "plane-split");
  CHECK(names[7] == "consistency");
  for (const auto& n : names) CHECK(is_suite(n));
  CHECK(!is_suite("table1"));
  CHECK(!is_suite(""));
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), UnknownSuite);
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), WalgError);
}

TEST_CASE("cheap suites are deterministic and well formed") {
  SuiteOptions opt;
  for (const std::string name : {"branching", "parity", "weyl-maps"}) {
    CAPTURE(name);
    SuiteResult a = run_suite(name, opt);
    SuiteResult b = run_suite(name, opt);
    std::string ja = report_json({a}, opt);
    std::string jb = report_json({b}, opt);
    CHECK(ja == jb);

    nlohmann::json doc = nlohmann::json::parse(ja);
    CHECK(doc["report_version"] == 1);
    CHECK(doc["options"]["seed"] == 42);
    CHECK(doc["suites"].size() == 1);
    CHECK(doc["suites"][0]["suite"] == name);
    CHECK(doc["checks"].get<std::size_t>() == a.checks.size());
    for (const auto& c : doc["suites"][0]["checks"]) {
      CHECK(!c["anchor"].get<std::string>().empty());
      const std::string st = c["status"];
      CHECK((st == "pass" || st == "fail" || st == "reported"));
    }
    CHECK(ja.find("elapsed") == std::string::npos);
    CHECK(ja.find("_ms") == std::string::npos);

    std::string text = report_text({a}, opt);
    CHECK(text.find(name) != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
  }
}

TEST_CASE("branching rows all pass") {
  SuiteResult r = run_suite("branching", {});
  REQUIRE(r.checks.size() == 9);
  CHECK(r.ok());
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.status == "pass");
  }
}

TEST_CASE("parity suite asserts ten rows and reports the first family") {
  SuiteResult r = run_suite("parity", {});
  std::size_t asserted = 0, reported = 0;
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    if (c.status == "reported") {
      ++reported;
      CHECK(c.name.find("spectrum-a") == 0);
      CHECK(!c.witness.empty());
      CHECK(c.witness.find("eigenvalues") != std::string::npos);
    } else {
      ++asserted;
      CHECK(c.status == "pass");
    }
  }
  CHECK(asserted == 10);
  CHECK(reported == 4);
  CHECK(r.ok());
}

TEST_CASE("weyl-maps suite passes") {
  SuiteResult r = run_suite("weyl-maps", {});
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.status == "pass");
  }
  CHECK(r.ok());
}

TEST_CASE("plane-split suite passes") {
  SuiteResult r = run_suite("plane-split", {});
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.status == "pass");
  }
  CHECK(r.ok());
}

TEST_CASE("degree knob reaches the plane-split fixed-dimension window") {
  SuiteOptions opt;
  opt.degree = 3;
  SuiteResult r = run_suite("plane-split", opt);
  bool found = false;
  for (const auto& c : r.checks)
    if (c.name == "fixed-dimensions-by-factor") {
      found = true;
      CHECK(c.anchor.find("up to 3") != std::string::npos);
      CHECK(c.status == "pass");
    }
  CHECK(found);
}

TEST_CASE("algebra definition round trip") {
  const std::string w1 = R"({
    "name": "W1",
    "generators": ["z", "d"],
    "relations": [{"pair": ["d", "z"], "normal": "z*d - 1"}]
  })";
  AlgebraDef def = parse_algebra_def(w1);
  CHECK(def.name == "W1");
  REQUIRE(def.pres.size() == 2);
  // d z = z d - 1, so [z, d] = 1
  NCPoly c = def.pres.commutator(def.pres.gen(0), def.pres.gen(1));
  CHECK(c == def.pres.one());

  const std::string w1flip = R"({
    "name": "V1",
    "generators": ["z", "d"],
    "relations": [{"pair": ["d", "z"], "normal": "z*d + 1"}]
  })";
  AlgebraDef flip = parse_algebra_def(w1flip);
  CHECK(flip.pres.commutator(flip.pres.gen(0), flip.pres.gen(1)) ==
        flip.pres.one() * Rational(-1));

  // serialization is stable under a parse/serialize cycle
  std::string ser = serialize_algebra_def(def.pres, def.name);
  AlgebraDef again = parse_algebra_def(ser);
  CHECK(serialize_algebra_def(again.pres, again.name) == ser);
  CHECK(again.pres.rewrite(1, 0) == def.pres.rewrite(1, 0));
}

TEST_CASE("algebra definition rejects bad input") {
  CHECK_THROWS_AS(parse_algebra_def("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra_def("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_algebra_def(R"({"generators": []})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_def(R"({"generators": ["z", "z"]})"), ParseError);

  const std::string unknown = R"({
    "generators": ["z", "d"],
    "relations": [{"pair": ["d", "z"], "normal": "q*d - 1"}]
  })";
  CHECK_THROWS_AS(parse_algebra_def(unknown), UnknownGenerator);
  const std::string unknown_pair = R"({
    "generators": ["z", "d"],
    "relations": [{"pair": ["q", "z"], "normal": "z*d - 1"}]
  })";
  CHECK_THROWS_AS(parse_algebra_def(unknown_pair), UnknownGenerator);

  const std::string out_of_order = R"({
    "generators": ["z", "d"],
    "relations": [{"pair": ["d", "z"], "normal": "d*z - 1"}]
  })";
  CHECK_THROWS_AS(parse_algebra_def(out_of_order), ParseError);

  const std::string wrong_pair_order = R"({
    "generators": ["z", "d"],
    "relations": [{"pair": ["z", "d"], "normal": "z*d - 1"}]
  })";
  CHECK_THROWS_AS(parse_algebra_def(wrong_pair_order), ParseError);

  const std::string negative_exponent = R"({
    "generators": ["z", "d"],
    "relations": [{"pair": ["d", "z"], "normal": "z^-1*d - 1"}]
  })";
  CHECK_THROWS_AS(parse_algebra_def(negative_exponent), ParseError);

  const std::string bad_lattice = R"({
    "generators": ["z", "d"],
    "localized_final": "rational"
  })";
  CHECK_THROWS_AS(parse_algebra_def(bad_lattice), ParseError);
}

TEST_CASE("localized definition keeps its lattice through a round trip") {
  const std::string loc = R"({
    "name": "plane",
    "generators": ["dz", "z"],
    "relations": [{"pair": ["z", "dz"], "normal": "dz*z - 1"}],
    "localized_final": "integer"
  })";
  AlgebraDef def = parse_algebra_def(loc);
  CHECK(def.pres.localized());
  CHECK(def.pres.lattice() == Lattice::Integer);
  // z dz = dz z - 1 means [dz, z] = 1
  CHECK(def.pres.commutator(def.pres.gen(0), def.pres.gen(1)) == def.pres.one());
  NCPoly inv = def.pres.parse("z^-1");
  CHECK(def.pres.multiply(inv, def.pres.gen(1)) == def.pres.one());

  std::string ser = serialize_algebra_def(def.pres, def.name);
  CHECK(ser.find("\"localized_final\": \"integer\"") != std::string::npos);
  AlgebraDef again = parse_algebra_def(ser);
  CHECK(serialize_algebra_def(again.pres, again.name) == ser);
}

TEST_CASE("minimal-w document round trip") {
  MinimalWData data;
  data.g0.names = {"h"};
  data.g0.br.assign(1, std::vector<Vec>(1, Vec(1, Rational(0))));
  data.action.emplace_back(2, 2);
  data.action[0].at(0, 0) = Rational(1);
  data.action[0].at(1, 1) = Rational(-1);
  data.g1_names = {"u", "v"};
  data.B_lower = {{}, {"h^2 + C + 1/2"}};

  std::string ser = serialize_minimal_w(data);
  MinimalWData back = parse_minimal_w(ser);
  CHECK(serialize_minimal_w(back) == ser);

  Presentation a = build_minimal_w(data);
  Presentation b = build_minimal_w(back);
  REQUIRE(a.size() == b.size());
  for (int j = 1; j < static_cast<int>(a.size()); ++j)
    for (int i = 0; i < j; ++i) CHECK(a.rewrite(j, i) == b.rewrite(j, i));

  CHECK_THROWS_AS(parse_minimal_w("{}"), ParseError);
  CHECK_THROWS_AS(parse_minimal_w(R"({"kind": "minimal-w"})"), ParseError);
  CHECK_THROWS_AS(parse_minimal_w("not json"), ParseError);
}

TEST_CASE("consistency suite flags the broken table and passes the rest") {
  SuiteResult r = run_suite("consistency", {});
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.status == "pass");
  }
  CHECK(r.ok());
}

TEST_CASE("json report separates failures") {
  SuiteResult fake;
  fake.suite = "demo";
  fake.checks.push_back({"good", "plumbing", "pass", ""});
  fake.checks.push_back({"bad", "plumbing", "fail", "difference 1"});
  fake.checks.push_back({"note", "plumbing", "reported", "value 7"});
  CHECK(!fake.ok());
  CHECK(fake.failures() == 1);
  nlohmann::json doc = nlohmann::json::parse(report_json({fake}, {}));
  CHECK(doc["failed"] == 1);
  CHECK(doc["checks"] == 3);
  CHECK(doc["suites"][0]["ok"] == false);
  std::string text = report_text({fake}, {});
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("difference 1") != std::string::npos);
}
