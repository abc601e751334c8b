#include <doctest/doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "homogkit/cli.hpp"
#include "homogkit/fixtures.hpp"
#include "homogkit/json_io.hpp"
#include "homogkit/poset.hpp"
#include "homogkit/structure.hpp"

using homogkit::BinaryStructure;
using nlohmann::json;

namespace {

std::string tempFile(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path.string();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = homogkit::runCommand(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("structure JSON round trips") {
  CHECK(homogkit::structureToJson(BinaryStructure(2, {{0, 1}})) ==
        R"({"n":2,"pairs":[[0,1]]})");
  CHECK(homogkit::structureToJson(BinaryStructure(0)) ==
        R"({"n":0,"pairs":[]})");

  homogkit::SplitMix64 rng{0x10ULL};
  for (int iter = 0; iter < 60; ++iter) {
    const auto x = homogkit::randomStructure(
        static_cast<int>(rng.below(7)), rng.next(),
        static_cast<homogkit::RandomClass>(rng.below(4)));
    CHECK(homogkit::structureFromJson(homogkit::structureToJson(x)) == x);
  }

  // Whitespace and field order are free.
  CHECK(homogkit::structureFromJson(R"( { "pairs" : [[1,0]] , "n" : 2 } )") ==
        BinaryStructure(2, {{1, 0}}));
}

TEST_CASE("structure JSON rejects malformed input") {
  CHECK_THROWS_AS(homogkit::structureFromJson("not json"),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(homogkit::structureFromJson("[]"),
                       "structure: expected an object with fields \"n\" and "
                       "\"pairs\"",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(homogkit::structureFromJson(R"({"n":-1,"pairs":[]})"),
                       "structure: \"n\" must be a nonnegative integer",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(homogkit::structureFromJson(R"({"n":2,"pairs":3})"),
                       "structure: \"pairs\" must be an array",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      homogkit::structureFromJson(R"({"n":2,"pairs":[[0]]})"),
      "structure: each pair must be a two-element integer array",
      std::invalid_argument);
  CHECK_THROWS_WITH_AS(homogkit::structureFromJson(R"({"n":2,"pairs":[[0,3]]})"),
                       "structure: pair [0,3] out of range for n=2",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      homogkit::structureFromJson(R"({"n":2,"pairs":[[0,1],[0,1]]})"),
      "structure: duplicate pair [0,1]", std::invalid_argument);
}

TEST_CASE("structure DOT export") {
  const BinaryStructure x(3, {{0, 0}, {0, 1}, {1, 0}, {1, 2}});
  const auto dot = homogkit::structureToDot(x);
  CHECK(contains(dot, "digraph structure {"));
  CHECK(contains(dot, "  0 -> 0;\n"));          // loop
  CHECK(contains(dot, "  0 -> 1 [dir=none];\n"));  // symmetric pair
  CHECK(contains(dot, "  1 -> 2;\n"));          // one-way arc
  CHECK_FALSE(contains(dot, "2 -> 1"));
}

TEST_CASE("poset JSON round trips and emits the closure") {
  const homogkit::FinitePoset v({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
  const auto text = homogkit::posetToJson(v);
  const auto back = homogkit::posetFromJson(text);
  CHECK(back == v);

  const auto doc = json::parse(text);
  CHECK(doc["elements"] == json::array({"a", "b", "c"}));
  // Reflexive pairs appear explicitly.
  CHECK(contains(text, R"(["a","a"])"));
  CHECK(contains(text, R"(["c","b"])"));

  // Cover pairs suffice on the way in.
  const auto chain = homogkit::posetFromJson(
      R"({"elements":["x","y","z"],"leq":[["x","y"],["y","z"]]})");
  CHECK(chain.leqByLabel("x", "z"));

  CHECK_THROWS_WITH_AS(homogkit::posetFromJson(R"({"elements":[3],"leq":[]})"),
                       "poset: \"elements\" must be an array of strings",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      homogkit::posetFromJson(R"({"elements":["a"],"leq":[["a"]]})"),
      "poset: each leq entry must be a two-element string array",
      std::invalid_argument);
  CHECK_THROWS_AS(homogkit::posetFromJson(R"({"elements":["a","a"],"leq":[]})"),
                  std::invalid_argument);
}

TEST_CASE("preorder JSON keeps equivalences") {
  const homogkit::FinitePreorder cyc({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  const auto text = homogkit::preorderToJson(cyc);
  CHECK(contains(text, R"(["a","b"])"));
  CHECK(contains(text, R"(["b","a"])"));
}

TEST_CASE("Hasse DOT export draws covers only") {
  const auto chain = homogkit::posetFromJson(
      R"({"elements":["x","y","z"],"leq":[["x","y"],["y","z"],["x","z"]]})");
  const auto dot = homogkit::posetToHasseDot(chain);
  CHECK(contains(dot, "rankdir=BT"));
  CHECK(contains(dot, "\"x\" -> \"y\";"));
  CHECK(contains(dot, "\"y\" -> \"z\";"));
  CHECK_FALSE(contains(dot, "\"x\" -> \"z\""));

  const homogkit::FinitePoset quoted({"a\"b", "c\\d"}, {{"a\"b", "c\\d"}});
  const auto q = homogkit::posetToHasseDot(quoted);
  CHECK(contains(q, R"("a\"b")"));
  CHECK(contains(q, R"("c\\d")"));
}

TEST_CASE("cli usage and dispatch") {
  const auto help = run({"help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "usage: homogkit"));

  const auto none = run({});
  CHECK(none.code == 2);
  CHECK(contains(none.err, "usage: homogkit"));

  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "unknown command 'frobnicate'"));

  const auto missing = run({"analyze", "/nonexistent/path.json"});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "error: cannot read '/nonexistent/path.json'"));
}

TEST_CASE("cli analyze") {
  const auto path = tempFile("hk_analyze.json",
                             homogkit::structureToJson(homogkit::fixture("mKn", {2, 3})));
  const auto human = run({"analyze", path});
  CHECK(human.code == 0);
  CHECK(contains(human.out, "vertices: 6\n"));
  CHECK(contains(human.out, "pairs: 12\n"));
  CHECK(contains(human.out, "graph: yes\n"));
  CHECK(contains(human.out, "connected: no\n"));
  CHECK(contains(human.out, "components (2): {0,1,2} {3,4,5}\n"));

  const auto machine = run({"analyze", path, "--json"});
  CHECK(machine.code == 0);
  const auto doc = json::parse(machine.out);
  CHECK(doc["n"] == 6);
  CHECK(doc["pairs"] == 12);
  CHECK(doc["predicates"]["graph"] == true);
  CHECK(doc["predicates"]["connected"] == false);
  CHECK(doc["components"] == json::parse("[[0,1,2],[3,4,5]]"));
}

TEST_CASE("cli uh reports witnesses and exit codes") {
  const auto p3 = tempFile("hk_p3.json",
                           homogkit::structureToJson(homogkit::fixture("Pn", {3})));
  const auto human = run({"uh", p3});
  CHECK(human.code == 1);
  CHECK(human.out ==
        "ultrahomogeneous: no\nnon-extendable partial isomorphism: {0->1}\n");

  const auto machine = run({"--json", "uh", p3});
  CHECK(machine.code == 1);
  CHECK(json::parse(machine.out) ==
        json::parse(R"({"ultrahomogeneous":false,"witness":{"0":1}})"));

  const auto k3 = tempFile("hk_k3.json",
                           homogkit::structureToJson(homogkit::fixture("Kn", {3})));
  const auto good = run({"uh", k3});
  CHECK(good.code == 0);
  CHECK(good.out == "ultrahomogeneous: yes\n");
  CHECK(json::parse(run({"uh", k3, "--json"}).out)["witness"].is_null());
}

TEST_CASE("cli decompose") {
  const auto path = tempFile("hk_2k3.json",
                             homogkit::structureToJson(homogkit::fixture("mKn", {2, 3})));
  const auto res = run({"decompose", path, "--json"});
  CHECK(res.code == 0);
  const auto doc = json::parse(res.out);
  CHECK(doc["variant"] == "plain");
  CHECK(doc["kappa"] == 2);
  CHECK(doc["digraph"] == json::parse(R"({"n":3,"pairs":[]})"));
  CHECK(doc["witness"].is_array());
  CHECK(doc["witness"].size() == 6);
  CHECK(doc["notes"] == json::array());

  // Pretty by default, compact under --json.
  const auto pretty = run({"decompose", path});
  CHECK(contains(pretty.out, "\n  \"variant\": \"plain\""));

  const auto bad = tempFile("hk_p3b.json",
                            homogkit::structureToJson(homogkit::fixture("Pn", {3})));
  const auto err = run({"decompose", bad});
  CHECK(err.code == 2);
  CHECK(contains(err.err, "error: decompose: input is not ultrahomogeneous"));
}

TEST_CASE("cli emb") {
  const auto k2 = tempFile("hk_k2.json",
                           homogkit::structureToJson(homogkit::fixture("Kn", {2})));
  const auto k3 = tempFile("hk_k3b.json",
                           homogkit::structureToJson(homogkit::fixture("Kn", {3})));
  const auto count = run({"emb", k2, k3});
  CHECK(count.code == 0);
  CHECK(count.out == "embeddings: 6\n");
  CHECK(json::parse(run({"emb", k2, k3, "--json"}).out)["count"] == 6);

  const auto list = run({"emb", k2, k3, "--list"});
  CHECK(list.code == 0);
  CHECK(list.out ==
        "{0->0, 1->1}\n{0->0, 1->2}\n{0->1, 1->0}\n"
        "{0->1, 1->2}\n{0->2, 1->0}\n{0->2, 1->1}\n");
  const auto jsonList = json::parse(run({"emb", k2, k3, "--list", "--json"}).out);
  CHECK(jsonList.size() == 6);
  CHECK(jsonList[0] == json::parse(R"({"0":0,"1":1})"));

  CHECK(run({"emb", k2}).code == 2);
}

TEST_CASE("cli poset operations") {
  const auto vee = tempFile(
      "hk_vee.json",
      R"({"elements":["a","b","c"],"leq":[["c","a"],["c","b"]]})");

  const auto atoms = run({"poset", vee, "atoms"});
  CHECK(atoms.code == 0);
  CHECK(atoms.out == "atoms (3): a b c\n");
  CHECK(json::parse(run({"poset", vee, "atoms", "--json"}).out) ==
        json::array({"a", "b", "c"}));

  const auto sep = run({"poset", vee, "separative"});
  CHECK(sep.code == 1);
  CHECK(sep.out == "separative: no\n");

  const auto sq = run({"poset", vee, "sq"});
  CHECK(sq.code == 0);
  const auto sqDoc = json::parse(sq.out);
  CHECK(sqDoc["elements"] == json::array({"a"}));

  const auto sm = run({"poset", vee, "sm"});
  const auto smDoc = json::parse(sm.out);
  CHECK(smDoc["elements"].size() == 3);
  CHECK(contains(sm.out, R"(["a","b"])"));  // the modification collapses the vee

  const auto dot = run({"poset", vee, "dot"});
  CHECK(contains(dot.out, "rankdir=BT"));
  CHECK(contains(dot.out, "\"c\" -> \"a\";"));

  CHECK(run({"poset", vee, "frob"}).code == 2);
  CHECK(contains(run({"poset", vee, "frob"}).err, "unknown poset operation"));
}

TEST_CASE("cli upset") {
  const auto eval = run({"upset", "eval", "mod(2,{0}) \\ mod(3,{0})"});
  CHECK(eval.code == 0);
  CHECK(eval.out == "canonical: mod(6,{2,4})\ninfinite, threshold 0, period 6\n");

  const auto doc = json::parse(
      run({"upset", "eval", "fin{2,1}", "--json"}).out);
  CHECK(doc["canonical"] == "fin{1,2}");
  CHECK(doc["finite"] == true);
  CHECK(doc["threshold"] == 3);
  CHECK(doc["period"] == 1);
  CHECK(doc["prefix"] == json::parse("[1,2]"));
  CHECK(doc["residues"] == json::array());

  const auto rel = run({"upset", "eval", "mod(4,{0})", "--rel", "mod(2,{0})",
                        "subset"});
  CHECK(rel.code == 0);
  CHECK(rel.out == "subset: yes\n");
  const auto relNo =
      run({"upset", "eval", "mod(2,{0})", "--rel", "mod(4,{0})", "subset"});
  CHECK(relNo.code == 1);
  const auto relJson = json::parse(run({"upset", "eval", "mod(2,{0})", "--rel",
                                        "mod(2,{1})", "compatible", "--json"})
                                       .out);
  CHECK(relJson["relation"] == "compatible");
  CHECK(relJson["holds"] == false);

  const auto parseErr = run({"upset", "eval", "mod(0,{1})"});
  CHECK(parseErr.code == 2);
  CHECK(contains(parseErr.err, "error: period must be positive at position 4"));

  CHECK(run({"upset", "eval", "omega", "--rel", "omega", "near"}).code == 2);
}

TEST_CASE("cli fixture and random") {
  const auto listing = run({"fixture"});
  CHECK(listing.code == 0);
  CHECK(contains(listing.out, "fixtures:"));
  CHECK(contains(listing.out, " mKn"));

  const auto two3 = run({"fixture", "mKn", "2", "3"});
  CHECK(two3.code == 0);
  CHECK(two3.out ==
        homogkit::structureToJson(homogkit::fixture("mKn", {2, 3})) + "\n");

  CHECK(run({"fixture", "mKn", "2", "x"}).code == 2);
  CHECK(run({"fixture", "nope"}).code == 2);

  const auto rand = run({"random", "graph", "4", "42"});
  CHECK(rand.code == 0);
  CHECK(rand.out ==
        homogkit::structureToJson(homogkit::randomStructure(
            4, 42, homogkit::RandomClass::Graph)) +
            "\n");
  CHECK(run({"random", "widget", "4", "42"}).code == 2);
  CHECK(run({"random", "graph", "-2", "42"}).code == 2);
  CHECK(run({"random", "graph", "4"}).code == 2);
}

TEST_CASE("cli reads standard input for dash") {
  std::istringstream feed(homogkit::structureToJson(homogkit::fixture("Kn", {3})));
  auto* old = std::cin.rdbuf(feed.rdbuf());
  const auto res = run({"uh", "-"});
  std::cin.rdbuf(old);
  CHECK(res.code == 0);
  CHECK(res.out == "ultrahomogeneous: yes\n");
}

TEST_CASE("cli verify runs a suite and honors the seed variable") {
  const auto unknown = run({"verify", "nope"});
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "unknown verification suite 'nope'"));

  const auto usage = run({"verify"});
  CHECK(usage.code == 2);
  CHECK(contains(usage.err, "verify expects one suite name (all, "));

  setenv("HOMOGKIT_SEED", "not-a-number", 1);
  const auto bad = run({"verify", "sq-algebra"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "HOMOGKIT_SEED must be a decimal integer"));

  setenv("HOMOGKIT_SEED", "12345", 1);
  const auto res = run({"verify", "sq-algebra"});
  unsetenv("HOMOGKIT_SEED");
  CHECK(res.code == 0);
  CHECK(contains(res.out, "Fact-4042-sq-algebra: PASS ("));

  const auto machine = run({"verify", "sq-algebra", "--json"});
  CHECK(machine.code == 0);
  const auto doc = json::parse(machine.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["suite"] == "sq-algebra");
  CHECK(doc[0]["claim"] == "Fact-4042-sq-algebra");
  CHECK(doc[0]["passed"] == true);
  CHECK(doc[0]["mismatches"] == 0);
}
