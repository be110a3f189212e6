#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "armatch/cli.hpp"
#include "armatch/constructions.hpp"
#include "armatch/io.hpp"

using namespace armatch;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("armatch_cli_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("formulas") {
  auto r = run({"formulas", "--name", "ar3", "--n", "30", "--s", "10"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["value"] == 2605);
  CHECK(j["name"] == "ar3");
  CHECK(j["params"]["n"] == 30);
  for (const char* key : {"valid", "provenance"}) CHECK(j.contains(key));

  CHECK(json::parse(run({"formulas", "--name", "turan3", "--n", "9", "--s", "3"}).out)["value"] == 56);
  CHECK(json::parse(run({"formulas", "--name", "ar-large", "--n", "13", "--k", "3", "--s", "3"}).out)["value"] == 68);
  CHECK(json::parse(run({"formulas", "--name", "lb-perfect", "--n", "16", "--k", "4"}).out)["value"] == 336);
  CHECK(json::parse(run({"formulas", "--name", "s0", "--n", "100", "--k", "3"}).out)["value"] == 28);
  CHECK(json::parse(run({"formulas", "--name", "turan-conj", "--n", "16", "--k", "4", "--s", "3"}).out)["value"] == 1365);

  r = run({"formulas", "--name", "alpha", "--k", "3", "--tol", "1e-9"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["inside_bounds"] == true);
  CHECK(j["value"]["lo"].get<std::string>().rfind("0.286855", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"formulas", "--name", "ar3", "--n", "30"}).code == 2);
  CHECK(run({"formulas", "--name", "nope", "--n", "30"}).code == 2);
  CHECK(run({"formulas", "--name", "ar3", "--n", "30", "--s", "10", "--bogus"}).code == 2);
  CHECK(run({"table", "--family", "ar3", "--n-range", "9-12"}).code == 2);
  CHECK(run({"construct", "--kind", "D", "--n", "7", "--k", "3", "--s", "2"}).code == 2);
  const auto r = run({"frobnicate"});
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("construct and verify") {
  const std::string coloring = temp_path("h1_9_3.coloring");
  REQUIRE(run({"construct", "--kind", "H1", "--n", "9", "--k", "3", "--output", coloring}).code == 0);
  auto r = run({"verify", "--certificate", "no-rainbow-pm", "--input", coloring});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["verdict"] == true);
  CHECK(j["search_size"] == 280);
  CHECK(run({"--threads", "2", "verify", "--certificate", "no-rainbow-pm", "--input", coloring}).code == 0);

  const std::string distinct = temp_path("distinct.coloring");
  {
    std::ofstream out(distinct);
    write_coloring(out, EdgeColoring::all_distinct(6, 3));
  }
  CHECK(run({"verify", "--certificate", "no-rainbow-pm", "--input", distinct}).code == 1);

  const std::string graph = temp_path("d_9_3_2.hg");
  REQUIRE(run({"construct", "--kind", "D", "--n", "9", "--k", "3", "--s", "2", "-o", graph}).code == 0);
  CHECK(parse_hypergraph(graph) == build_D(9, 3, 2));
  CHECK(run({"verify", "--certificate", "nu-equals-s", "--input", graph, "--s", "2"}).code == 0);
  CHECK(run({"verify", "--certificate", "nu-equals-s", "--input", graph, "--s", "3"}).code == 1);
  CHECK(run({"verify", "--certificate", "stable", "--input", graph}).code == 0);
  CHECK(run({"verify", "--certificate", "saturated", "--input", graph, "--s", "2"}).code == 0);
  CHECK(run({"verify", "--certificate", "saturated", "--input", graph}).code == 2);
  CHECK(run({"verify", "--certificate", "stable", "--input", temp_path("missing.hg")}).code == 2);

  r = run({"construct", "--kind", "Hcover", "--n", "7", "--k", "3", "--s", "2", "--W", "6,7"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  const auto cover = read_hypergraph(in);
  CHECK(cover == build_Hcover(7, 3, 2, make_set({6, 7})));
  const std::string moved = temp_path("cover.hg");
  run({"construct", "--kind", "Hcover", "--n", "7", "--k", "3", "--s", "2", "--W", "6,7", "-o", moved});
  CHECK(run({"verify", "--certificate", "stable", "--input", moved}).code == 1);

  r = run({"construct", "--kind", "DScript", "--n", "9", "--s", "2", "--emit-spec"});
  REQUIRE(r.code == 0);
  const std::string spec = temp_path("spec.json");
  {
    std::ofstream out(spec);
    out << r.out;
  }
  r = run({"construct", "--spec", spec});
  REQUIRE(r.code == 0);
  std::istringstream spec_in(r.out);
  CHECK(read_hypergraph(spec_in).edge_count() == 47);

  r = run({"construct", "--kind", "turan-plus-one", "--n", "9", "--k", "3", "--s", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("9 3 29\n", 0) == 0);

  for (const auto& p : {coloring, distinct, graph, moved, spec}) std::filesystem::remove(p);
}

TEST_CASE("oracle") {
  auto r = run({"oracle", "--name", "turan", "--n", "9", "--k", "3", "--s", "2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["oracle"] == 56);
  CHECK(j["formula"] == 56);
  CHECK(j["agree"] == true);

  r = run({"oracle", "--name", "hilton-milner", "--m", "6", "--l", "2"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["oracle"] == 10);
  CHECK(j["agree"] == true);

  CHECK(run({"oracle", "--name", "turan", "--n", "12", "--k", "3", "--s", "2"}).code == 3);
  CHECK(run({"oracle", "--name", "hilton-milner", "--m", "9", "--l", "2"}).code == 3);
}

TEST_CASE("table") {
  auto r = run({"table", "--family", "turan3", "--n-range", "9..10"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "n,s,value,valid,branch\n9,2,28,proved,cover\n9,3,56,proved,clique\n10,2,36,proved,cover\n"
                 "10,3,64,proved,cover\n");
  r = run({"table", "--family", "ar3", "--n-range", "30..30", "--s", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "n,s,value,valid,branch\n30,10,2605,conjectured,n=3s\n");
}

TEST_CASE("properties run is reproducible") {
  const auto a = run({"--seed", "17", "properties", "--cases", "200"});
  const auto b = run({"properties", "--cases", "200", "--seed", "17"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = json::parse(a.out);
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == 17);
}

}
