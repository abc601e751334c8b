#ifndef HOMOGKIT_HOMOGENEITY_HPP
#define HOMOGKIT_HOMOGENEITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "homogkit/embedding.hpp"
#include "homogkit/structure.hpp"

namespace homogkit {

// Keeps each one-way pair and drops the two-way ones, turning an irreflexive
// complete structure into a digraph: x -> y iff x rho y and not y rho x.
// Throws std::invalid_argument naming a violating pair when the input has a
// loop or an unrelated pair of distinct vertices.
BinaryStructure orientation(const BinaryStructure& x);

struct ComponentCriterionReport {
  struct PerComponent {
    bool isomorphicToFirst = false;
    bool ultrahomogeneous = false;
    bool complete = false;
  };
  bool uh = false;  // conjunction of all three flags over all components
  std::vector<PerComponent> details;
};

// For irreflexive disconnected input: ultrahomogeneous iff the components are
// pairwise isomorphic, each ultrahomogeneous and each complete. Throws on
// connected or non-irreflexive input.
ComponentCriterionReport componentCriterion(const BinaryStructure& x);

// The five shapes an ultrahomogeneous structure with unmixed diagonal can
// take. A non-biconnected one is, up to isomorphism, a stack of kappa
// enlarged copies of one ultrahomogeneous digraph, possibly reflexified,
// complemented, or both.
enum class Variant { Biconnected, Plain, Re, C, ReC };

std::string variantName(Variant v);
std::optional<Variant> variantFromName(const std::string& name);

struct DecompositionReport {
  Variant variant = Variant::Biconnected;
  std::optional<BinaryStructure> digraph;  // absent for biconnected
  std::optional<int> multiplicity;         // kappa >= 2, absent for biconnected
  // Vertex bijection from reconstruct(variant, digraph, multiplicity) onto
  // the input; the round trip is verified before the report is returned.
  std::optional<std::vector<int>> witness;
  std::vector<std::string> notes;
};

// Case analysis, tried in this order:
//   (1) x disconnected and irreflexive            -> plain
//   (2) x disconnected and reflexive              -> re
//   (3) complement(x) disconnected and irreflexive -> c
//   (4) complement(x) disconnected and reflexive   -> re_c
//   otherwise x is biconnected.
// The extracted digraph is the orientation of the component containing
// vertex 0 (of x, its irreflexification, its complement, or its complement's
// irreflexification, per case). Rejects empty input, mixed diagonals and
// non-ultrahomogeneous input with std::invalid_argument. Should more than one
// case condition ever match, the first wins and the coincidence is recorded
// in notes.
DecompositionReport decompose(const BinaryStructure& x);

// Disjoint union of kappa copies of enlarge(y), then the variant's wrapper:
// plain = as is, re = reflexify, c = complement, re_c = complement of
// reflexify. y must be a digraph and kappa >= 1; Variant::Biconnected is not
// a reconstruction recipe and is rejected.
BinaryStructure reconstruct(Variant v, const BinaryStructure& y, int kappa);

}  // namespace homogkit

#endif
