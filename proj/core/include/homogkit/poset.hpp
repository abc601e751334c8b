#ifndef HOMOGKIT_POSET_HPP
#define HOMOGKIT_POSET_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homogkit/embedding.hpp"

namespace homogkit {

// Finite reflexive transitive relation over labelled elements. The
// constructor accepts any relation and takes its reflexive-transitive
// closure; element labels must be distinct and every relation pair must name
// known labels.
class FinitePreorder {
 public:
  FinitePreorder() = default;
  FinitePreorder(std::vector<std::string> elements,
                 const std::vector<std::pair<std::string, std::string>>& relation);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& elements() const { return labels_; }
  std::size_t indexOf(const std::string& label) const;  // throws on unknown label
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool leqByLabel(const std::string& a, const std::string& b) const;

  // The full closure as label pairs, sorted.
  std::vector<std::pair<std::string, std::string>> relationPairs() const;

  bool operator==(const FinitePreorder&) const = default;

 private:
  friend class FinitePoset;
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

// A preorder whose closure is antisymmetric. Construction throws
// std::invalid_argument naming two distinct elements that ended up
// equivalent.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> elements,
              const std::vector<std::pair<std::string, std::string>>& relation);

  std::size_t size() const { return pre_.size(); }
  const std::vector<std::string>& elements() const { return pre_.elements(); }
  std::size_t indexOf(const std::string& label) const { return pre_.indexOf(label); }
  bool leq(std::size_t a, std::size_t b) const { return pre_.leq(a, b); }
  bool leqByLabel(const std::string& a, const std::string& b) const {
    return pre_.leqByLabel(a, b);
  }
  std::vector<std::pair<std::string, std::string>> relationPairs() const {
    return pre_.relationPairs();
  }
  const FinitePreorder& order() const { return pre_; }

  bool operator==(const FinitePoset&) const = default;

 private:
  FinitePreorder pre_;
};

// Family of vertex subsets ordered by inclusion. Labels render each subset
// as "{a,b,c}". The family must be nonempty; duplicates collapse.
FinitePoset inclusionPoset(const CopySet& family);

// p is an atom when every two elements below p are compatible, that is, have
// a common lower bound in the order.
std::vector<std::string> atoms(const FinitePreorder& p);
std::vector<std::string> atoms(const FinitePoset& p);

bool isAtomless(const FinitePreorder& p);
bool isAtomless(const FinitePoset& p);

// Atoms are dense: below every element lies an atom.
bool isAtomic(const FinitePreorder& p);
bool isAtomic(const FinitePoset& p);

// Whenever p is not below q, some r below p is incompatible with q.
bool isSeparative(const FinitePoset& p);

// The separative modification: p <=* q iff below every r <= p some s <= r
// lies below q. Contains the original order; a preorder in general.
FinitePreorder separativeModification(const FinitePoset& p);

// Quotient of the separative modification by mutual <=*. Classes are
// labelled by their member with the least element index; the quotient order
// is separative.
FinitePoset separativeQuotient(const FinitePoset& p);

// Componentwise order on tuples, elements enumerated with the first factor
// most significant and labelled "(a,b,...)". The factor list must be
// nonempty.
FinitePoset product(const std::vector<FinitePoset>& factors);
FinitePreorder product(const std::vector<FinitePreorder>& factors);

// Lexicographically least order isomorphism as an index map from p to q, or
// nullopt. Backtracking pruned by (down-set size, up-set size) signatures;
// intended for small posets (around a dozen elements).
std::optional<std::vector<std::size_t>> posetIsomorphic(const FinitePoset& p,
                                                        const FinitePoset& q);

}  // namespace homogkit

#endif
