#ifndef HOMOGKIT_UPSET_HPP
#define HOMOGKIT_UPSET_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homogkit {

// An ultimately periodic subset of the natural numbers: below the threshold
// membership is listed explicitly (prefix), from the threshold on it is
// periodic (residues mod period). Values are canonical: the period is the
// least eventual period and the threshold is the least consistent cut, so
// equal sets have equal fields and operator== decides semantic equality.
//
// Periods and thresholds are capped at kLimit to keep boolean operations
// (which align at the lcm of the periods) affordable; exceeding the cap
// throws std::length_error.
class UPSet {
 public:
  static constexpr std::uint64_t kLimit = 1u << 22;

  UPSet();  // the empty set
  UPSet(std::uint64_t threshold, std::vector<std::uint64_t> prefix,
        std::uint64_t period, std::vector<std::uint64_t> residues);

  static UPSet finiteSet(std::vector<std::uint64_t> elements);
  static UPSet mod(std::uint64_t period, std::vector<std::uint64_t> residues);
  static UPSet omega();

  bool contains(std::uint64_t k) const;
  bool finite() const { return residues_.empty(); }
  bool infinite() const { return !finite(); }
  bool isEmpty() const { return finite() && prefix_.empty(); }

  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return period_; }
  const std::vector<std::uint64_t>& prefix() const { return prefix_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }

  bool operator==(const UPSet&) const = default;

 private:
  void canonicalize();

  std::uint64_t threshold_ = 0;
  std::vector<std::uint64_t> prefix_;
  std::uint64_t period_ = 1;
  std::vector<std::uint64_t> residues_;
};

UPSet unionOf(const UPSet& a, const UPSet& b);
UPSet intersect(const UPSet& a, const UPSet& b);
UPSet difference(const UPSet& a, const UPSet& b);
UPSet complement(const UPSet& a);

bool subsetOf(const UPSet& a, const UPSet& b);

// Inclusion modulo finitely many exceptions: a minus b is finite.
bool almostSubset(const UPSet& a, const UPSet& b);
bool almostEqual(const UPSet& a, const UPSet& b);

// Infinite intersection.
bool compatible(const UPSet& a, const UPSet& b);

// Splits an infinite set into the subsequences of its elements with even and
// odd index, two disjoint infinite pieces whose union is the input. The
// pieces live at twice the period. Throws on finite input.
std::pair<UPSet, UPSet> split(const UPSet& a);

struct SmLeqVerdict {
  bool leq = false;
  // On a negative verdict: difference(a, b), an infinite subset of a that is
  // incompatible with b.
  std::optional<UPSet> witness;
};

// Decides a <=* b, which for these sets coincides with almostSubset. A
// positive verdict is additionally validated on a deterministic sample of
// infinite subsets of a (its split halves and index-residue subsequences),
// each of which must meet b infinitely. Both arguments must be infinite.
SmLeqVerdict smLeqWitness(const UPSet& a, const UPSet& b);

// Greatest-style lower bound of a finite almostSubset-decreasing chain of
// infinite sets: the intersection of the members, which such a chain keeps
// infinite. Throws std::invalid_argument on an empty chain, a finite member,
// or a chain that is not decreasing (the error names the offending index
// pair).
UPSet chainLowerBound(const std::vector<UPSet>& chain);

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position);
  std::size_t position;
};

// Grammar (whitespace insignificant):
//   atom := "fin{" ints "}" | "mod(" period "," "{" ints "}" ")" | "omega"
//   expr := atom | "(" expr ")" | expr "&" expr | expr "|" expr
//         | expr "\" expr | "~" expr
// Precedence, tightest first: ~, &, \, |; binary operators associate left.
// Periods must be positive and residues smaller than their period.
UPSet parseUPSet(const std::string& text);

// Canonical rendering; parseUPSet(render(a)) == a. Finite sets render as
// fin{...}, pure periodic sets as omega or mod(p,{...}), everything else as
// a union/difference of those forms.
std::string render(const UPSet& a);

}  // namespace homogkit

#endif
