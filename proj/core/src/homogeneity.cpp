#include "homogkit/homogeneity.hpp"

#include <stdexcept>

namespace homogkit {

namespace {

std::string pairText(int x, int y) {
  return "[" + std::to_string(x) + "," + std::to_string(y) + "]";
}

}  // namespace

BinaryStructure orientation(const BinaryStructure& x) {
  const int n = x.size();
  for (int a = 0; a < n; ++a) {
    if (x.has(a, a))
      throw std::invalid_argument("orientation: input has loop " + pairText(a, a));
    for (int b = a + 1; b < n; ++b)
      if (!x.has(a, b) && !x.has(b, a))
        throw std::invalid_argument("orientation: unrelated pair " + pairText(a, b) +
                                    ", input must be complete");
  }
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (x.has(a, b) && !x.has(b, a)) arcs.emplace_back(a, b);
  return BinaryStructure::fromPairs(n, arcs);
}

ComponentCriterionReport componentCriterion(const BinaryStructure& x) {
  if (!predicates(x).irreflexive)
    throw std::invalid_argument("componentCriterion: input must be irreflexive");
  const auto part = components(x);
  if (part.blocks.size() == 1)
    throw std::invalid_argument("componentCriterion: input must be disconnected");
  ComponentCriterionReport report;
  report.uh = true;
  std::optional<BinaryStructure> first;
  for (const auto& block : part.blocks) {
    const BinaryStructure sub = x.induced(block);
    ComponentCriterionReport::PerComponent detail;
    if (!first) {
      first = sub;
      detail.isomorphicToFirst = true;
    } else {
      detail.isomorphicToFirst = isomorphic(sub, *first);
    }
    detail.ultrahomogeneous = isUltrahomogeneous(sub).ultrahomogeneous;
    detail.complete = predicates(sub).complete;
    report.uh = report.uh && detail.isomorphicToFirst && detail.ultrahomogeneous &&
                detail.complete;
    report.details.push_back(detail);
  }
  return report;
}

std::string variantName(Variant v) {
  switch (v) {
    case Variant::Biconnected: return "biconnected";
    case Variant::Plain: return "plain";
    case Variant::Re: return "re";
    case Variant::C: return "c";
    case Variant::ReC: return "re_c";
  }
  return "?";
}

std::optional<Variant> variantFromName(const std::string& name) {
  if (name == "biconnected") return Variant::Biconnected;
  if (name == "plain") return Variant::Plain;
  if (name == "re") return Variant::Re;
  if (name == "c") return Variant::C;
  if (name == "re_c") return Variant::ReC;
  return std::nullopt;
}

BinaryStructure reconstruct(Variant v, const BinaryStructure& y, int kappa) {
  if (v == Variant::Biconnected)
    throw std::invalid_argument(
        "reconstruct: variant must be plain, re, c or re_c");
  if (kappa < 1)
    throw std::invalid_argument("reconstruct: multiplicity must be >= 1");
  if (!predicates(y).digraph)
    throw std::invalid_argument("reconstruct: digraph argument must be a digraph");
  const std::vector<BinaryStructure> parts(static_cast<std::size_t>(kappa),
                                           enlarge(y));
  BinaryStructure out = disjointUnion(parts);
  switch (v) {
    case Variant::Plain: break;
    case Variant::Re: out = reflexify(out); break;
    case Variant::C: out = complement(out); break;
    case Variant::ReC: out = complement(reflexify(out)); break;
    case Variant::Biconnected: break;  // unreachable
  }
  return out;
}

DecompositionReport decompose(const BinaryStructure& x) {
  if (x.size() == 0)
    throw std::invalid_argument(
        "decompose: empty structure has no component decomposition");
  const Predicates px = predicates(x);
  if (!px.reflexive && !px.irreflexive)
    throw std::invalid_argument(
        "decompose: diagonal is mixed, input must be reflexive or irreflexive");

  const BinaryStructure xc = complement(x);
  const bool xDisconnected = !px.connected;
  const bool xcDisconnected = !isConnected(xc);

  struct Case {
    Variant variant;
    bool condition;
  };
  const Case cases[] = {
      {Variant::Plain, xDisconnected && px.irreflexive},
      {Variant::Re, xDisconnected && px.reflexive},
      {Variant::C, xcDisconnected && px.reflexive},
      {Variant::ReC, xcDisconnected && px.irreflexive},
  };

  DecompositionReport report;
  std::vector<std::string> matched;
  for (const auto& c : cases)
    if (c.condition) matched.push_back(variantName(c.variant));
  if (matched.size() > 1)
    report.notes.push_back("multiple case conditions matched (" +
                           [&] {
                             std::string s;
                             for (const auto& m : matched)
                               s += (s.empty() ? "" : ", ") + m;
                             return s;
                           }() +
                           "), keeping the first");

  if (matched.empty()) {
    // Both x and its complement are connected. This branch is the only one
    // that needs the general checker.
    auto verdict = isUltrahomogeneous(x);
    if (!verdict.ultrahomogeneous)
      throw std::invalid_argument("decompose: input is not ultrahomogeneous");
    report.variant = Variant::Biconnected;
    return report;
  }

  Variant variant = Variant::Plain;
  for (const auto& c : cases)
    if (c.condition) {
      variant = c.variant;
      break;
    }

  // Reduce to a disconnected irreflexive structure; by the closure
  // identities its homogeneity is equivalent to the input's, and for the
  // disconnected irreflexive shape the component criterion decides it
  // without walking the full partial-isomorphism frontier.
  BinaryStructure z = x;
  switch (variant) {
    case Variant::Plain: break;
    case Variant::Re: z = irreflexify(x); break;
    case Variant::C: z = xc; break;
    case Variant::ReC: z = irreflexify(xc); break;
    case Variant::Biconnected: break;  // unreachable
  }

  const auto criterion = componentCriterion(z);
  if (!criterion.uh)
    throw std::invalid_argument("decompose: input is not ultrahomogeneous");

  const auto part = components(z);
  // Blocks are ordered by smallest vertex, so the block holding vertex 0 is
  // the first one.
  const BinaryStructure representative = z.induced(part.blocks.front());
  const BinaryStructure digraph = orientation(representative);
  const int kappa = static_cast<int>(part.blocks.size());

  const BinaryStructure rebuilt = reconstruct(variant, digraph, kappa);
  auto witness = isomorphism(rebuilt, x);
  if (!witness)
    throw std::logic_error("decompose: round-trip verification failed");

  report.variant = variant;
  report.digraph = digraph;
  report.multiplicity = kappa;
  report.witness = std::move(witness);
  return report;
}

}  // namespace homogkit
