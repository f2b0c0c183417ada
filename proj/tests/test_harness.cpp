#include "doctest.h"
#include "gaplab/harness.hpp"
#include "json.hpp"

using namespace gaplab;
using ordered_json = nlohmann::ordered_json;

TEST_CASE("pipeline: K3 under the basic vertex cover LP") {
  auto lines = runPipeline(R"({"stages":[
    {"kind":"complete-graph","n":3},
    {"kind":"gap","relaxation":"vc"}]})");
  REQUIRE(lines.size() == 1);
  ordered_json j = ordered_json::parse(lines[0]);
  CHECK(j["lpValue"] == "3/2");
  CHECK(j["opt"] == "2");
  CHECK(j["ratio"] == "4/3");
}

TEST_CASE("pipeline: triangle CSP at two SA rounds") {
  auto lines = runPipeline(R"({"stages":[
    {"kind":"maxcut-triangle"},
    {"kind":"sa-gap","rounds":2}]})");
  REQUIRE(lines.size() == 1);
  ordered_json j = ordered_json::parse(lines[0]);
  CHECK(j["lpValue"] == "1");
  CHECK(j["opt"] == "2/3");
  CHECK(j["ratio"] == "3/2");
}

TEST_CASE("pipeline: tiny UG through the reduction onto the host graph") {
  auto lines = runPipeline(R"({"stages":[
    {"kind":"gen-ug","n":1,"R":2,"degree":1,"seed":1},
    {"kind":"reduce","target":"1f","eps":"1/2","t":1},
    {"kind":"host-exactness","target":"1f"}]})");
  REQUIRE(lines.size() == 1);
  ordered_json j = ordered_json::parse(lines[0]);
  CHECK(j["type"] == "check");
  CHECK(j["exact"] == true);
  CHECK(j["mu"] == "2");

  auto ne = runPipeline(R"({"stages":[
    {"kind":"gen-ug","n":1,"R":2,"degree":1,"seed":1},
    {"kind":"reduce","target":"ne","eps":"1/2","t":1,"q":3},
    {"kind":"host-exactness","target":"ne"}]})");
  REQUIRE(ne.size() == 1);
  ordered_json jn = ordered_json::parse(ne[0]);
  CHECK(jn["exact"] == true);
  CHECK(jn["mu"] == "1");
}

TEST_CASE("pipeline determinism and re-derivation from provenance") {
  const std::string config = R"({"meta":{"delta":"1/10","kappa":"asymptotic only"},
    "stages":[
    {"kind":"gen-graph","n":6,"p":"1/2","seed":11},
    {"kind":"gap","relaxation":"vc"}]})";
  auto a = runPipeline(config);
  auto b = runPipeline(config);
  CHECK(a == b);
  REQUIRE(a.size() == 1);

  // rebuild the config from the provenance chain, bit-for-bit
  ordered_json line = ordered_json::parse(a[0]);
  ordered_json rebuilt;
  rebuilt["stages"] = ordered_json::array();
  for (const auto& entry : line["provenance"]) {
    if (entry.contains("meta")) {
      rebuilt["meta"] = entry["meta"];
    } else {
      rebuilt["stages"].push_back(entry);
    }
  }
  auto again = runPipeline(rebuilt.dump());
  REQUIRE(again.size() == 1);
  CHECK(again[0] == a[0]);
}

TEST_CASE("lifted vertex cover gap narrows on odd cycles") {
  auto lines = runPipeline(R"({"stages":[
    {"kind":"cycle-graph","n":5},
    {"kind":"gap","relaxation":"vc"}]})");
  ordered_json base = ordered_json::parse(lines.at(0));
  CHECK(base["lpValue"] == "5/2");
  auto lifted = runPipeline(R"({"stages":[
    {"kind":"cycle-graph","n":5},
    {"kind":"gap","relaxation":"vc","rounds":2}]})");
  ordered_json j = ordered_json::parse(lifted.at(0));
  CHECK(parseRational(j["lpValue"].get<std::string>()) >= ratio(5, 2));
  CHECK(j["opt"] == "3");
}

TEST_CASE("generators are seeded and valid") {
  CHECK(graphToJson(randomGraph(8, ratio(1, 2), 7)) ==
        graphToJson(randomGraph(8, ratio(1, 2), 7)));
  CHECK(graphToJson(randomGraph(8, ratio(1, 2), 7)) !=
        graphToJson(randomGraph(8, ratio(1, 2), 8)));

  UgInstance u = randomUg(4, 2, 2, 1);
  CHECK(bipartition(u).has_value());
  CHECK(regularDegree(u) == 2);

  CspInstance f = random1fCsp(4, 2, 3, 3);
  CHECK(validateOneFreeBit(f, 2).ok);

  CspInstance ne = randomNeCsp(4, 2, 3, 3, 4);
  for (const auto& c : ne.constraints) CHECK(asNotEqual(c, 3).has_value());
}

TEST_CASE("every named suite exists and passes on bundled instances") {
  for (const auto& name : suiteNames()) {
    SuiteResult res = verifySuite(name);
    CHECK_MESSAGE(res.pass, name, ": ", res.detail);
  }
  CHECK_THROWS_AS(verifySuite("unknown"), GaplabError);
}

TEST_CASE("gap report digests are stable and ratios exact") {
  GapReport rep;
  rep.lpValue = ratio(3, 2);
  rep.opt = 2;
  rep.ratio = ratio(4, 3);
  rep.size = 9;
  rep.variables = 3;
  rep.provenance = "[]";
  rep.digest = digestOf(rep.provenance + "|3/2|2");
  std::string a = gapReportToJson(rep);
  CHECK(a == gapReportToJson(rep));
  CHECK(digestOf("x") != digestOf("y"));
}
