#ifndef HOMOGKIT_EMBEDDING_HPP
#define HOMOGKIT_EMBEDDING_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "homogkit/structure.hpp"

namespace homogkit {

// Injective map from a subset of source vertices to target vertices.
// Assignments are kept sorted by source vertex.
class PartialMap {
 public:
  PartialMap() = default;
  explicit PartialMap(std::vector<std::pair<int, int>> assignments);

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  std::optional<int> image(int source) const;
  bool hasTarget(int target) const;
  const std::vector<std::pair<int, int>>& assignments() const { return pairs_; }

  // Must not already contain the source or the target.
  PartialMap extended(int source, int target) const;

  bool operator==(const PartialMap&) const = default;
  // Ordered by domain size first, then lexicographically by assignment list.
  // This is the enumeration order used throughout the library.
  bool operator<(const PartialMap& other) const;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Deduplicated vertex subsets, each sorted ascending, the whole family sorted
// lexicographically.
using CopySet = std::vector<std::vector<int>>;

// True when f preserves the relation both ways on its domain (loops
// included). f must map into y's vertex range.
bool isPartialIsomorphismBetween(const BinaryStructure& x,
                                 const BinaryStructure& y, const PartialMap& f);

// All injections f with x(a,b) iff y(f(a),f(b)), in lexicographic order of
// the image tuple (f(0), f(1), ...). The search assigns source vertices in
// decreasing (out-degree, in-degree) order and prunes candidate targets whose
// signature cannot dominate, then sorts the results.
std::vector<PartialMap> embeddings(const BinaryStructure& x,
                                   const BinaryStructure& y);

std::vector<PartialMap> automorphisms(const BinaryStructure& x);

// Images of embeddings(x, y) as a deduplicated family of vertex sets.
CopySet copies(const BinaryStructure& x, const BinaryStructure& y);

// All partial isomorphisms of x into itself with domain size at most
// maxSize, the empty map included. Ordered by (size, assignments).
// maxSize must not exceed size(x).
std::vector<PartialMap> partialIsomorphisms(const BinaryStructure& x,
                                            int maxSize);

struct UhVerdict {
  bool ultrahomogeneous = false;
  // On failure: the first partial isomorphism, in (size, lexicographic)
  // order, that admits no one-point extension for some missing vertex.
  std::optional<PartialMap> witness;
};

// Decides whether every partial isomorphism extends to an automorphism, via
// the one-point extension property: levels of the partial-isomorphism
// frontier are grown breadth-first and memoized, and the check fails exactly
// when some member of the frontier cannot absorb some further vertex.
UhVerdict isUltrahomogeneous(const BinaryStructure& x);

// Computes copies(x, y) by the component route: every copy of x is a union
// of copies of x's components whose images are pairwise unlinked in
// rsRelation(y). Must agree with copies(x, y) exactly; the pair of routes is
// kept as a cross-check.
CopySet copiesViaComponents(const BinaryStructure& x, const BinaryStructure& y);

// Connected, and every two members of copies(x, x) are linked by
// rsRelation(x). For finite structures copies(x, x) is the single full
// vertex set, so this coincides with connectivity; the definition is still
// evaluated literally.
bool stronglyConnected(const BinaryStructure& x);

}  // namespace homogkit

#endif
