#ifndef HOMOGKIT_STRUCTURE_HPP
#define HOMOGKIT_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homogkit {

// A finite structure with one binary relation: vertices 0..n-1 plus a set of
// ordered pairs. Loops (x,x) are allowed. Stored as a dense bit matrix, which
// is the right trade-off for the sizes this library targets (mostly <= 16).
// Instances are immutable once built; all transforms return new values.
class BinaryStructure {
 public:
  BinaryStructure() = default;
  explicit BinaryStructure(int size);
  BinaryStructure(int size, std::initializer_list<std::pair<int, int>> pairs);

  // Validates every pair against [0,size); throws std::invalid_argument
  // naming the first offending pair. Duplicates are accepted here (it is a
  // set); the JSON reader is stricter.
  static BinaryStructure fromPairs(int size,
                                   const std::vector<std::pair<int, int>>& pairs);

  int size() const { return n_; }
  bool has(int x, int y) const { return bit(index(x, y)); }
  int pairCount() const;

  // All pairs in lexicographic order.
  std::vector<std::pair<int, int>> pairs() const;

  // Substructure induced on the given vertices, relabelled by their ascending
  // order. Vertices must be distinct and in range.
  BinaryStructure induced(const std::vector<int>& vertices) const;

  bool operator==(const BinaryStructure& other) const = default;

 private:
  friend BinaryStructure complement(const BinaryStructure&);
  friend BinaryStructure inverse(const BinaryStructure&);
  friend BinaryStructure reflexify(const BinaryStructure&);
  friend BinaryStructure irreflexify(const BinaryStructure&);
  friend BinaryStructure enlarge(const BinaryStructure&);
  friend BinaryStructure rsRelation(const BinaryStructure&);
  friend BinaryStructure disjointUnion(const std::vector<BinaryStructure>&);

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y);
  }
  bool bit(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void setBit(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void set(int x, int y) { setBit(index(x, y)); }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Literal set complement within size x size, diagonal included: loops flip
// like any other pair.
BinaryStructure complement(const BinaryStructure& x);

// Transpose: pair (a,b) becomes (b,a).
BinaryStructure inverse(const BinaryStructure& x);

// Union with the diagonal.
BinaryStructure reflexify(const BinaryStructure& x);

// Relation minus the diagonal.
BinaryStructure irreflexify(const BinaryStructure& x);

// Keeps every pair of x and additionally relates both ways each pair of
// distinct vertices that x relates in neither direction. Already-related
// pairs are never touched, so the reverse of an existing one-way arc stays
// absent.
BinaryStructure enlarge(const BinaryStructure& x);

// Diagonal plus the relation plus its inverse.
BinaryStructure rsRelation(const BinaryStructure& x);

// Concatenates the parts with cumulative vertex offsets. The sequence must be
// nonempty; throws std::invalid_argument otherwise.
BinaryStructure disjointUnion(const std::vector<BinaryStructure>& parts);

struct ComponentPartition {
  // Blocks are ordered by their smallest vertex, vertices ascending inside
  // each block. blockOf[v] is the index of the block containing v.
  std::vector<std::vector<int>> blocks;
  std::vector<int> blockOf;
};

// Connected components of the reflexive-symmetric closure rsRelation(x).
ComponentPartition components(const BinaryStructure& x);

struct Predicates {
  bool reflexive = false;
  bool irreflexive = false;
  bool graph = false;       // irreflexive and symmetric
  bool digraph = false;     // irreflexive and asymmetric
  bool tournament = false;  // complete digraph
  bool complete = false;    // every pair of distinct vertices related some way
  bool connected = false;   // exactly one component; false for the empty structure
  bool biconnected = false; // x and complement(x) both connected
};

Predicates predicates(const BinaryStructure& x);

bool isConnected(const BinaryStructure& x);

// Lexicographically least isomorphism x -> y as a vertex image vector, or
// nullopt. Backtracking pruned by (in-degree, out-degree, loop) signatures;
// deterministic.
std::optional<std::vector<int>> isomorphism(const BinaryStructure& x,
                                            const BinaryStructure& y);

bool isomorphic(const BinaryStructure& x, const BinaryStructure& y);

}  // namespace homogkit

#endif
