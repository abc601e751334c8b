#include "homogkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "homogkit/embedding.hpp"
#include "homogkit/fixtures.hpp"
#include "homogkit/homogeneity.hpp"
#include "homogkit/json_io.hpp"
#include "homogkit/poset.hpp"
#include "homogkit/structure.hpp"
#include "homogkit/upset.hpp"
#include "homogkit/verify.hpp"

namespace homogkit {

namespace {

using nlohmann::json;

const char* kUsage = R"(usage: homogkit <command> [arguments] [--json]

commands:
  analyze <file>                     predicates and components of a structure
  uh <file>                          ultrahomogeneity verdict, witness on failure
  decompose <file>                   stack decomposition report
  emb <fileX> <fileY> [--count|--list]
                                     embeddings of X into Y (count is the default)
  poset <file> <atoms|sm|sq|separative|dot>
                                     poset operations
  upset eval <expr> [--rel <expr2> <subset|almostsubset|compatible>]
                                     evaluate an ultimately periodic set
  verify <suite|all>                 run verification suites
  fixture [<name> [params...]]      emit a named fixture (no name: list them)
  random <class> <n> <seed>          emit a seeded random structure

Structure files are JSON {"n": ..., "pairs": [[a,b], ...]}; poset files are
JSON {"elements": [...], "leq": [[a,b], ...]}. "-" reads standard input.
Exit codes: 0 success or a true verdict, 1 a false verdict, 2 errors.
HOMOGKIT_SEED overrides the verification seed.
)";

std::string readInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t verifySeed() {
  const char* env = std::getenv("HOMOGKIT_SEED");
  if (env == nullptr || *env == '\0') return kDefaultVerifySeed;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0')
    throw std::runtime_error("HOMOGKIT_SEED must be a decimal integer");
  return value;
}

json structureJson(const BinaryStructure& x) {
  return json::parse(structureToJson(x));
}

json mapJson(const PartialMap& f) {
  json obj = json::object();
  for (const auto& [s, t] : f.assignments()) obj[std::to_string(s)] = t;
  return obj;
}

std::string mapText(const PartialMap& f) {
  std::string out = "{";
  bool sep = false;
  for (const auto& [s, t] : f.assignments()) {
    if (sep) out += ", ";
    out += std::to_string(s) + "->" + std::to_string(t);
    sep = true;
  }
  return out + "}";
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

int cmdAnalyze(const std::vector<std::string>& args, bool machine,
               std::ostream& out) {
  if (args.size() != 1) throw std::runtime_error("analyze expects one file");
  const BinaryStructure x = structureFromJson(readInput(args[0]));
  const Predicates p = predicates(x);
  const ComponentPartition parts = components(x);
  if (machine) {
    json doc;
    doc["n"] = x.size();
    doc["pairs"] = x.pairCount();
    doc["predicates"] = {{"reflexive", p.reflexive},
                         {"irreflexive", p.irreflexive},
                         {"graph", p.graph},
                         {"digraph", p.digraph},
                         {"tournament", p.tournament},
                         {"complete", p.complete},
                         {"connected", p.connected},
                         {"biconnected", p.biconnected}};
    doc["components"] = parts.blocks;
    out << doc.dump() << "\n";
    return 0;
  }
  out << "vertices: " << x.size() << "\n";
  out << "pairs: " << x.pairCount() << "\n";
  out << "reflexive: " << yesNo(p.reflexive) << "\n";
  out << "irreflexive: " << yesNo(p.irreflexive) << "\n";
  out << "graph: " << yesNo(p.graph) << "\n";
  out << "digraph: " << yesNo(p.digraph) << "\n";
  out << "tournament: " << yesNo(p.tournament) << "\n";
  out << "complete: " << yesNo(p.complete) << "\n";
  out << "connected: " << yesNo(p.connected) << "\n";
  out << "biconnected: " << yesNo(p.biconnected) << "\n";
  out << "components (" << parts.blocks.size() << "):";
  for (const auto& block : parts.blocks) {
    out << " {";
    for (std::size_t i = 0; i < block.size(); ++i)
      out << (i ? "," : "") << block[i];
    out << "}";
  }
  out << "\n";
  return 0;
}

int cmdUh(const std::vector<std::string>& args, bool machine,
          std::ostream& out) {
  if (args.size() != 1) throw std::runtime_error("uh expects one file");
  const BinaryStructure x = structureFromJson(readInput(args[0]));
  const UhVerdict v = isUltrahomogeneous(x);
  if (machine) {
    json doc;
    doc["ultrahomogeneous"] = v.ultrahomogeneous;
    doc["witness"] = v.witness ? mapJson(*v.witness) : json();
    out << doc.dump() << "\n";
  } else {
    out << "ultrahomogeneous: " << yesNo(v.ultrahomogeneous) << "\n";
    if (v.witness)
      out << "non-extendable partial isomorphism: " << mapText(*v.witness)
          << "\n";
  }
  return v.ultrahomogeneous ? 0 : 1;
}

int cmdDecompose(const std::vector<std::string>& args, bool machine,
                 std::ostream& out) {
  if (args.size() != 1) throw std::runtime_error("decompose expects one file");
  const BinaryStructure x = structureFromJson(readInput(args[0]));
  const DecompositionReport rep = decompose(x);
  json doc;
  doc["variant"] = variantName(rep.variant);
  doc["digraph"] = rep.digraph ? structureJson(*rep.digraph) : json();
  doc["kappa"] = rep.multiplicity ? json(*rep.multiplicity) : json();
  doc["witness"] = rep.witness ? json(*rep.witness) : json();
  doc["notes"] = rep.notes;
  out << (machine ? doc.dump() : doc.dump(2)) << "\n";
  return 0;
}

int cmdEmb(const std::vector<std::string>& args, bool machine,
           std::ostream& out) {
  bool list = false;
  std::vector<std::string> files;
  for (const std::string& a : args) {
    if (a == "--list") list = true;
    else if (a == "--count") list = false;
    else files.push_back(a);
  }
  if (files.size() != 2) throw std::runtime_error("emb expects two files");
  const BinaryStructure x = structureFromJson(readInput(files[0]));
  const BinaryStructure y = structureFromJson(readInput(files[1]));
  const std::vector<PartialMap> all = embeddings(x, y);
  if (list) {
    if (machine) {
      json arr = json::array();
      for (const PartialMap& f : all) arr.push_back(mapJson(f));
      out << arr.dump() << "\n";
    } else {
      for (const PartialMap& f : all) out << mapText(f) << "\n";
    }
  } else {
    if (machine)
      out << json{{"count", all.size()}}.dump() << "\n";
    else
      out << "embeddings: " << all.size() << "\n";
  }
  return 0;
}

int cmdPoset(const std::vector<std::string>& args, bool machine,
             std::ostream& out) {
  if (args.size() != 2)
    throw std::runtime_error("poset expects a file and an operation");
  const FinitePoset p = posetFromJson(readInput(args[0]));
  const std::string& op = args[1];
  if (op == "atoms") {
    const std::vector<std::string> found = atoms(p);
    if (machine) {
      out << json(found).dump() << "\n";
    } else {
      out << "atoms (" << found.size() << "):";
      for (const std::string& a : found) out << " " << a;
      out << "\n";
    }
    return 0;
  }
  if (op == "sm") {
    out << preorderToJson(separativeModification(p)) << "\n";
    return 0;
  }
  if (op == "sq") {
    out << posetToJson(separativeQuotient(p)) << "\n";
    return 0;
  }
  if (op == "separative") {
    const bool verdict = isSeparative(p);
    if (machine)
      out << json{{"separative", verdict}}.dump() << "\n";
    else
      out << "separative: " << yesNo(verdict) << "\n";
    return verdict ? 0 : 1;
  }
  if (op == "dot") {
    out << posetToHasseDot(p);
    return 0;
  }
  throw std::runtime_error("unknown poset operation '" + op +
                           "' (atoms, sm, sq, separative, dot)");
}

int cmdUpset(const std::vector<std::string>& args, bool machine,
             std::ostream& out) {
  if (args.empty() || args[0] != "eval")
    throw std::runtime_error("upset expects: eval <expr> [--rel <expr2> <relation>]");
  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::string relExpr, relName;
  std::vector<std::string> positional;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == "--rel") {
      if (i + 2 >= rest.size())
        throw std::runtime_error("--rel expects an expression and a relation");
      relExpr = rest[i + 1];
      relName = rest[i + 2];
      i += 2;
    } else {
      positional.push_back(rest[i]);
    }
  }
  if (positional.size() != 1)
    throw std::runtime_error("upset eval expects one expression");
  const UPSet a = parseUPSet(positional[0]);
  if (relName.empty()) {
    if (machine) {
      json doc;
      doc["canonical"] = render(a);
      doc["finite"] = a.finite();
      doc["threshold"] = a.threshold();
      doc["period"] = a.period();
      doc["prefix"] = a.prefix();
      doc["residues"] = a.residues();
      out << doc.dump() << "\n";
    } else {
      out << "canonical: " << render(a) << "\n";
      out << (a.finite() ? "finite" : "infinite") << ", threshold "
          << a.threshold() << ", period " << a.period() << "\n";
    }
    return 0;
  }
  const UPSet b = parseUPSet(relExpr);
  bool holds = false;
  if (relName == "subset") holds = subsetOf(a, b);
  else if (relName == "almostsubset") holds = almostSubset(a, b);
  else if (relName == "compatible") holds = compatible(a, b);
  else
    throw std::runtime_error("unknown relation '" + relName +
                             "' (subset, almostsubset, compatible)");
  if (machine)
    out << json{{"relation", relName}, {"holds", holds}}.dump() << "\n";
  else
    out << relName << ": " << yesNo(holds) << "\n";
  return holds ? 0 : 1;
}

int cmdVerify(const std::vector<std::string>& args, bool machine,
              std::ostream& out) {
  if (args.size() != 1) {
    std::string names = "all";
    for (const std::string& n : verifySuiteNames()) names += ", " + n;
    throw std::runtime_error("verify expects one suite name (" + names + ")");
  }
  const std::uint64_t seed = verifySeed();
  std::vector<VerifyResult> results;
  if (args[0] == "all") {
    results = runAllVerifySuites(seed);
  } else {
    results.push_back(runVerifySuite(args[0], seed));
  }
  bool allPassed = true;
  if (machine) {
    json arr = json::array();
    for (const VerifyResult& r : results) {
      arr.push_back({{"suite", r.suite},
                     {"claim", r.claim},
                     {"passed", r.passed},
                     {"cases", r.cases},
                     {"mismatches", r.mismatches},
                     {"detail", r.detail}});
      allPassed = allPassed && r.passed;
    }
    out << arr.dump() << "\n";
  } else {
    for (const VerifyResult& r : results) {
      out << r.claim << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases
          << " cases, " << r.mismatches << " mismatches)\n";
      out << "  " << r.detail << "\n";
      allPassed = allPassed && r.passed;
    }
  }
  return allPassed ? 0 : 1;
}

int cmdFixture(const std::vector<std::string>& args, bool machine,
               std::ostream& out) {
  if (args.empty()) {
    if (machine) {
      out << json(fixtureNames()).dump() << "\n";
    } else {
      out << "fixtures:";
      for (const std::string& n : fixtureNames()) out << " " << n;
      out << "\n";
    }
    return 0;
  }
  std::vector<int> params;
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::size_t used = 0;
    params.push_back(std::stoi(args[i], &used));
    if (used != args[i].size())
      throw std::runtime_error("fixture parameters must be integers");
  }
  out << structureToJson(fixture(args[0], params)) << "\n";
  return 0;
}

int cmdRandom(const std::vector<std::string>& args, bool,
              std::ostream& out) {
  if (args.size() != 3)
    throw std::runtime_error("random expects: <class> <n> <seed>");
  const auto cls = randomClassFromName(args[0]);
  if (!cls) {
    std::string names;
    for (const char* n : {"any", "irreflexive", "digraph", "graph"})
      names += names.empty() ? n : std::string(", ") + n;
    throw std::runtime_error("unknown class '" + args[0] + "' (" + names + ")");
  }
  std::size_t used = 0;
  const int n = std::stoi(args[1], &used);
  if (used != args[1].size() || n < 0)
    throw std::runtime_error("n must be a nonnegative integer");
  char* end = nullptr;
  const unsigned long long seed = std::strtoull(args[2].c_str(), &end, 10);
  if (end == nullptr || *end != '\0')
    throw std::runtime_error("seed must be a decimal integer");
  out << structureToJson(randomStructure(n, seed, *cls)) << "\n";
  return 0;
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  bool machine = false;
  std::vector<std::string> rest;
  for (const std::string& a : args) {
    if (a == "--json") machine = true;
    else rest.push_back(a);
  }
  if (rest.empty()) {
    err << kUsage;
    return 2;
  }
  const std::string command = rest[0];
  rest.erase(rest.begin());
  try {
    if (command == "analyze") return cmdAnalyze(rest, machine, out);
    if (command == "uh") return cmdUh(rest, machine, out);
    if (command == "decompose") return cmdDecompose(rest, machine, out);
    if (command == "emb") return cmdEmb(rest, machine, out);
    if (command == "poset") return cmdPoset(rest, machine, out);
    if (command == "upset") return cmdUpset(rest, machine, out);
    if (command == "verify") return cmdVerify(rest, machine, out);
    if (command == "fixture") return cmdFixture(rest, machine, out);
    if (command == "random") return cmdRandom(rest, machine, out);
    if (command == "help" || command == "--help" || command == "-h") {
      out << kUsage;
      return 0;
    }
    err << "error: unknown command '" << command << "'\n" << kUsage;
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace homogkit
