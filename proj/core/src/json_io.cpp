#include "homogkit/json_io.hpp"

#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace homogkit {

using nlohmann::json;

namespace {

json parseText(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

std::string pairText(int x, int y) {
  return "[" + std::to_string(x) + "," + std::to_string(y) + "]";
}

}  // namespace

BinaryStructure structureFromJson(const std::string& text) {
  const json doc = parseText(text, "structure");
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("pairs"))
    throw std::invalid_argument(
        "structure: expected an object with fields \"n\" and \"pairs\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw std::invalid_argument("structure: \"n\" must be a nonnegative integer");
  const int n = doc["n"].get<int>();
  if (!doc["pairs"].is_array())
    throw std::invalid_argument("structure: \"pairs\" must be an array");
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> seen;
  for (const auto& entry : doc["pairs"]) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer())
      throw std::invalid_argument(
          "structure: each pair must be a two-element integer array");
    const int a = entry[0].get<int>();
    const int b = entry[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("structure: pair " + pairText(a, b) +
                                  " out of range for n=" + std::to_string(n));
    if (!seen.emplace(a, b).second)
      throw std::invalid_argument("structure: duplicate pair " + pairText(a, b));
    pairs.emplace_back(a, b);
  }
  return BinaryStructure::fromPairs(n, pairs);
}

std::string structureToJson(const BinaryStructure& x) {
  json doc;
  doc["n"] = x.size();
  json pairs = json::array();
  for (const auto& [a, b] : x.pairs()) pairs.push_back(json::array({a, b}));
  doc["pairs"] = std::move(pairs);
  return doc.dump();
}

std::string structureToDot(const BinaryStructure& x) {
  std::string out = "digraph structure {\n";
  for (int v = 0; v < x.size(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (int a = 0; a < x.size(); ++a) {
    if (x.has(a, a)) out += "  " + std::to_string(a) + " -> " + std::to_string(a) + ";\n";
    for (int b = a + 1; b < x.size(); ++b) {
      if (x.has(a, b) && x.has(b, a))
        out += "  " + std::to_string(a) + " -> " + std::to_string(b) +
               " [dir=none];\n";
      else if (x.has(a, b))
        out += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
      else if (x.has(b, a))
        out += "  " + std::to_string(b) + " -> " + std::to_string(a) + ";\n";
    }
  }
  return out + "}\n";
}

FinitePoset posetFromJson(const std::string& text) {
  const json doc = parseText(text, "poset");
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("leq"))
    throw std::invalid_argument(
        "poset: expected an object with fields \"elements\" and \"leq\"");
  if (!doc["elements"].is_array())
    throw std::invalid_argument("poset: \"elements\" must be an array of strings");
  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string())
      throw std::invalid_argument("poset: \"elements\" must be an array of strings");
    elements.push_back(e.get<std::string>());
  }
  if (!doc["leq"].is_array())
    throw std::invalid_argument("poset: \"leq\" must be an array");
  std::vector<std::pair<std::string, std::string>> relation;
  for (const auto& entry : doc["leq"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw std::invalid_argument(
          "poset: each leq entry must be a two-element string array");
    relation.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
  }
  return FinitePoset(std::move(elements), relation);
}

namespace {

template <typename Order>
std::string orderToJson(const Order& p) {
  json doc;
  doc["elements"] = p.elements();
  json leq = json::array();
  for (const auto& [a, b] : p.relationPairs()) leq.push_back(json::array({a, b}));
  doc["leq"] = std::move(leq);
  return doc.dump();
}

}  // namespace

std::string posetToJson(const FinitePoset& p) { return orderToJson(p); }
std::string preorderToJson(const FinitePreorder& p) { return orderToJson(p); }

std::string posetToHasseDot(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  for (std::size_t v = 0; v < n; ++v) out += "  " + quoted(p.elements()[v]) + ";\n";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        cover = c == a || c == b || !(p.leq(a, c) && p.leq(c, b));
      if (cover)
        out += "  " + quoted(p.elements()[a]) + " -> " + quoted(p.elements()[b]) +
               ";\n";
    }
  return out + "}\n";
}

}  // namespace homogkit
