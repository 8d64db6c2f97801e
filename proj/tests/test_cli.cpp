/*
 * Copyright 2026 the coxcones authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "coxcones/cli.hpp"
#include "json.hpp"

using namespace coxcones;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify json output") {
  Run r = cli({"classify", "--factors", "1,3", "--degree", "4,2", "--level", "very_general", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["mds"] == "no");
  CHECK(j["nef"]["rays"] == nlohmann::json::parse("[[1,0],[-2,3]]"));
}

TEST_CASE("classify text output includes the case tag and open-ray marker") {
  Run r = cli({"classify", "--factors", "1,2", "--degree", "3,3", "--level", "very_general"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("surface_eff_not_closed") != std::string::npos);
  CHECK(r.out.find("°") != std::string::npos);
}

TEST_CASE("classify of an ample two-factor hypersurface") {
  Run r = cli({"classify", "--factors", "2,2", "--degree", "1,1", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mds"] == "yes");
  CHECK(j["nef"]["rays"] == nlohmann::json::parse("[[1,0],[0,1]]"));
  CHECK(j["eff"]["rays"] == j["nef"]["rays"]);
  CHECK(j["mov"]["rays"] == j["nef"]["rays"]);
}

TEST_CASE("flip-eval single point") {
  Run r = cli({"flip-eval", "--d", "2", "--e", "2", "--n", "3", "--f", "diagonal", "--point",
               "[[1,1],[1,2,0,0]]", "--mod", "5", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["image"]["coordinates"] == nlohmann::json::parse("[[1,0],[1,2,0,0]]"));

  // inverse direction returns to the original point
  Run inv = cli({"flip-eval", "--d", "2", "--e", "2", "--n", "3", "--f", "diagonal", "--point",
                 "[[1,0],[1,2,0,0]]", "--mod", "5", "--inverse", "--json"});
  REQUIRE(inv.code == 0);
  auto ji = nlohmann::json::parse(inv.out);
  CHECK(ji["image"]["coordinates"] == nlohmann::json::parse("[[1,1],[1,2,0,0]]"));
}

TEST_CASE("flip-eval accepts an explicit defining form") {
  Run r = cli({"flip-eval", "--d", "1", "--e", "2", "--n", "3", "--f", "x0*y0^2 + x1*y1^2",
               "--point", "[[1,4],[1,1,0,0]]", "--mod", "5", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["image"]["coordinates"] == nlohmann::json::parse("[[1],[1,1,0,0]]"));

  // a form of the wrong bidegree is a computation error
  Run bad = cli({"flip-eval", "--d", "2", "--e", "2", "--n", "3", "--f", "x0*y0^2 + x1*y1^2",
                 "--point", "[[1,4],[1,1,0,0]]", "--mod", "5"});
  CHECK(bad.code == 1);
}

TEST_CASE("flip-eval accepts the hypersurface wire format") {
  Run r = cli({"flip-eval", "--hypersurface",
               R"({"factors":[1,3],"multidegree":[2,2],"f":"x0^2*y0^2 + x0*x1*y1^2 + x1^2*y2^2"})",
               "--point", "[[1,1],[1,2,0,0]]", "--mod", "5", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["image"]["coordinates"] == nlohmann::json::parse("[[1,0],[1,2,0,0]]"));

  CHECK(cli({"flip-eval", "--point", "[[1,1],[1,2,0,0]]"}).code == 2);  // no surface given
}

TEST_CASE("flip-eval sampling is deterministic in the seed") {
  std::vector<std::string> args = {"flip-eval", "--d", "2", "--e", "2", "--n", "3",
                                   "--sample", "12", "--seed", "7", "--json"};
  Run a = cli(args);
  Run b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["sampled"] == 12);
  CHECK(j["roundtrip_ok"] == 12);

  Run c = cli({"flip-eval", "--d", "2", "--e", "2", "--n", "3", "--sample", "12", "--seed", "8", "--json"});
  CHECK(c.out != a.out);
}

TEST_CASE("indeterminacy maps to exit code 1 with a machine-readable error") {
  Run r = cli({"flip-eval", "--d", "2", "--e", "2", "--n", "3", "--f", "diagonal", "--point",
               "[[1,1],[0,0,0,1]]", "--mod", "5", "--json"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["error"]["code"] == "indeterminacy");
}

TEST_CASE("usage errors map to exit code 2") {
  CHECK(cli({"classify"}).code == 2);
  CHECK(cli({"no-such-command"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"classify", "--factors", "1,3", "--degree", "2,2", "--unknown-flag"}).code == 2);
  CHECK(cli({"classify", "--factors", "banana", "--degree", "2,2"}).code == 2);
  CHECK(cli({"classify", "--factors", "1,3", "--degree", "2,2", "--level", "sometimes"}).code == 2);
}

TEST_CASE("every subcommand has help") {
  for (const char* sub :
       {"classify", "classify-grid", "hilbert", "flip-eval", "git-chambers", "intersect", "cox"}) {
    Run r = cli({sub, "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--") != std::string::npos);
  }
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("intersect evaluates the top product") {
  Run r = cli({"intersect", "--factors", "1,3", "--degree", "4,2", "--classes", "[[-4,6],[-4,6],[-4,6]]"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "0\n");
  Run j = cli({"intersect", "--factors", "1,3", "--degree", "4,2", "--classes",
               "[[0,1],[0,1],[0,1]]", "--json"});
  auto pj = nlohmann::json::parse(j.out);
  CHECK(pj["value"] == "4");
}

TEST_CASE("git-chambers output") {
  Run r = cli({"git-chambers", "--d", "2", "--e", "2", "--n", "3", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["chambers"].size() == 3);
  CHECK(j["chambers"][0]["label"] == "Y");
  CHECK(j["chambers"][1]["wall"] == true);
  CHECK(j["chambers"][2]["label"] == "Y+");
}

TEST_CASE("hilbert emits both tsv and json") {
  Run t = cli({"hilbert", "--d", "2", "--e", "2", "--n", "3", "--amin", "-1", "--amax", "1",
               "--bmin", "0", "--bmax", "2", "--tsv"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("\t") != std::string::npos);

  Run jr = cli({"hilbert", "--d", "2", "--e", "2", "--n", "3", "--amin", "-1", "--amax", "1",
                "--bmin", "0", "--bmax", "2", "--json"});
  auto j = nlohmann::json::parse(jr.out);
  REQUIRE(j["table"].size() == 9);
  // h0(-1, e) = d and koszul agrees
  for (const auto& cell : j["table"]) {
    if (cell["a"] == -1 && cell["b"] == 2) {
      CHECK(cell["h0"] == 2);
      CHECK(cell["koszul"] == 2);
    }
  }
}

TEST_CASE("cox prints the presentation and certifies the fixture") {
  Run r = cli({"cox", "--factors", "1,3", "--degree", "2,2", "--f", "diagonal", "--certify", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["generator_count"] == 8);
  REQUIRE(j["relations"].size() == 3);
  CHECK(j["relations"][0] == "y0^2 + x1*z1");
  CHECK(j["certification"].get<std::string>().find("certified") != std::string::npos);

  // no presentation in the non-MDS region
  Run bad = cli({"cox", "--factors", "1,3", "--degree", "5,2", "--level", "very_general", "--json"});
  CHECK(bad.code == 1);
}

TEST_CASE("classify-grid determinism and symbols") {
  std::vector<std::string> args = {"classify-grid", "--n", "3", "--dmax", "6", "--emax", "6"};
  Run a = cli(args);
  Run b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("Y") != std::string::npos);
  CHECK(a.out.find("N") != std::string::npos);

  Run j = cli({"classify-grid", "--n", "3", "--dmax", "4", "--emax", "4", "--json"});
  auto pj = nlohmann::json::parse(j.out);
  CHECK(pj["cells"].size() == 16);
}

TEST_CASE("COXCONES_BUDGET env var overrides the groebner budget") {
  setenv("COXCONES_BUDGET", "100000,1", 1);  // degree cap 1 kills the quadrics
  Run r = cli({"cox", "--factors", "1,3", "--degree", "2,2", "--f", "diagonal", "--certify", "--json"});
  unsetenv("COXCONES_BUDGET");
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["code"] == "budget_exceeded");

  Run ok = cli({"cox", "--factors", "1,3", "--degree", "2,2", "--f", "diagonal", "--certify", "--json"});
  CHECK(ok.code == 0);
}

TEST_CASE("json reports re-serialize identically") {
  Run r = cli({"classify", "--factors", "1,3", "--degree", "2,2", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}
