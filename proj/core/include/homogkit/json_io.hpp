#ifndef HOMOGKIT_JSON_IO_HPP
#define HOMOGKIT_JSON_IO_HPP

#include <string>

#include "homogkit/poset.hpp"
#include "homogkit/structure.hpp"

namespace homogkit {

// Structure schema: {"n": <int>, "pairs": [[i,j], ...]}. Rejects malformed
// JSON, out-of-range vertices and duplicate pairs; the error names the
// offending pair.
BinaryStructure structureFromJson(const std::string& text);
std::string structureToJson(const BinaryStructure& x);

// Graphviz export. Symmetric pairs of distinct vertices render once as an
// undirected edge, one-way pairs as arrows, loops as self-arcs.
std::string structureToDot(const BinaryStructure& x);

// Poset schema: {"elements": ["a", ...], "leq": [["a","b"], ...]}. The
// relation goes through the closing constructor, so cover pairs suffice;
// serialization emits the full closure and round-trips.
FinitePoset posetFromJson(const std::string& text);
std::string posetToJson(const FinitePoset& p);
std::string preorderToJson(const FinitePreorder& p);

// Hasse diagram: arrows point from the smaller element up to its covers.
std::string posetToHasseDot(const FinitePoset& p);

}  // namespace homogkit

#endif
