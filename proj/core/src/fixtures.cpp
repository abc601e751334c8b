#include "homogkit/fixtures.hpp"

#include <stdexcept>

namespace homogkit {

namespace {

void needParams(const std::string& name, const std::vector<int>& params,
                std::size_t count) {
  if (params.size() != count)
    throw std::invalid_argument("fixture " + name + ": expected " +
                                std::to_string(count) + " parameter(s), got " +
                                std::to_string(params.size()));
}

void needAtLeast(const std::string& name, int value, int bound) {
  if (value < bound)
    throw std::invalid_argument("fixture " + name + ": parameter " +
                                std::to_string(value) + " must be >= " +
                                std::to_string(bound));
}

BinaryStructure completeGraph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  return BinaryStructure::fromPairs(n, pairs);
}

}  // namespace

BinaryStructure fixture(const std::string& name, const std::vector<int>& params) {
  if (name == "An") {
    needParams(name, params, 1);
    needAtLeast(name, params[0], 0);
    return BinaryStructure(params[0]);
  }
  if (name == "Kn") {
    needParams(name, params, 1);
    needAtLeast(name, params[0], 0);
    return completeGraph(params[0]);
  }
  if (name == "mKn") {
    needParams(name, params, 2);
    needAtLeast(name, params[0], 1);
    needAtLeast(name, params[1], 0);
    return disjointUnion(std::vector<BinaryStructure>(
        static_cast<std::size_t>(params[0]), completeGraph(params[1])));
  }
  if (name == "C3") {
    needParams(name, params, 0);
    return BinaryStructure(3, {{0, 1}, {1, 2}, {2, 0}});
  }
  if (name == "Cn") {
    needParams(name, params, 1);
    needAtLeast(name, params[0], 3);
    const int n = params[0];
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
      const int b = (a + 1) % n;
      pairs.emplace_back(a, b);
      pairs.emplace_back(b, a);
    }
    return BinaryStructure::fromPairs(n, pairs);
  }
  if (name == "Ln") {
    needParams(name, params, 1);
    needAtLeast(name, params[0], 0);
    const int n = params[0];
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return BinaryStructure::fromPairs(n, pairs);
  }
  if (name == "Pn") {
    needParams(name, params, 1);
    needAtLeast(name, params[0], 0);
    const int n = params[0];
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a + 1 < n; ++a) {
      pairs.emplace_back(a, a + 1);
      pairs.emplace_back(a + 1, a);
    }
    return BinaryStructure::fromPairs(n, pairs);
  }
  if (name == "Kmn") {
    needParams(name, params, 2);
    needAtLeast(name, params[0], 0);
    needAtLeast(name, params[1], 0);
    const int m = params[0];
    const int n = params[1];
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) {
        pairs.emplace_back(a, m + b);
        pairs.emplace_back(m + b, a);
      }
    return BinaryStructure::fromPairs(m + n, pairs);
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> fixtureNames() {
  return {"An", "Kn", "mKn", "C3", "Cn", "Ln", "Pn", "Kmn"};
}

std::optional<RandomClass> randomClassFromName(const std::string& name) {
  if (name == "any") return RandomClass::Any;
  if (name == "irreflexive") return RandomClass::Irreflexive;
  if (name == "digraph") return RandomClass::Digraph;
  if (name == "graph") return RandomClass::Graph;
  return std::nullopt;
}

std::string randomClassName(RandomClass c) {
  switch (c) {
    case RandomClass::Any: return "any";
    case RandomClass::Irreflexive: return "irreflexive";
    case RandomClass::Digraph: return "digraph";
    case RandomClass::Graph: return "graph";
  }
  return "?";
}

BinaryStructure randomStructure(int n, std::uint64_t seed, RandomClass cls) {
  if (n < 0) throw std::invalid_argument("randomStructure: size must be >= 0");
  SplitMix64 rng{seed};
  std::vector<std::pair<int, int>> pairs;
  switch (cls) {
    case RandomClass::Any:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (rng.coin()) pairs.emplace_back(a, b);
      break;
    case RandomClass::Irreflexive:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b && rng.coin()) pairs.emplace_back(a, b);
      break;
    case RandomClass::Digraph:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          switch (rng.below(3)) {
            case 1: pairs.emplace_back(a, b); break;
            case 2: pairs.emplace_back(b, a); break;
            default: break;
          }
      break;
    case RandomClass::Graph:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (rng.coin()) {
            pairs.emplace_back(a, b);
            pairs.emplace_back(b, a);
          }
      break;
  }
  return BinaryStructure::fromPairs(n, pairs);
}

}  // namespace homogkit
