#include "homogkit/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "homogkit/embedding.hpp"
#include "homogkit/fixtures.hpp"
#include "homogkit/homogeneity.hpp"
#include "homogkit/poset.hpp"
#include "homogkit/structure.hpp"
#include "homogkit/upset.hpp"

namespace homogkit {

namespace {

// Counts checks and keeps a description of the first failure. The describe
// callback runs only on failure, so the hot loops pay nothing for it.
struct Tally {
  long long cases = 0;
  long long mismatches = 0;
  std::string first;

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++cases;
    if (ok) return;
    ++mismatches;
    if (first.empty()) first = describe();
  }
};

std::string structText(const BinaryStructure& x) {
  std::ostringstream out;
  out << "n=" << x.size() << " pairs=[";
  bool sep = false;
  for (const auto& [a, b] : x.pairs()) {
    if (sep) out << ",";
    out << "(" << a << "," << b << ")";
    sep = true;
  }
  out << "]";
  return out.str();
}

std::uint64_t suiteSeed(std::uint64_t master, int index) {
  SplitMix64 rng{master ^
                 (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1))};
  return rng.next();
}

// ---- structure enumerators (small n only) ----

// Every structure on n vertices whose diagonal is empty: one bit per ordered
// pair of distinct vertices.
std::vector<BinaryStructure> allIrreflexive(int n) {
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) cells.emplace_back(a, b);
  std::vector<BinaryStructure> out;
  out.reserve(std::size_t{1} << cells.size());
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells.size()); ++code) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if ((code >> i) & 1) pairs.push_back(cells[i]);
    out.push_back(BinaryStructure::fromPairs(n, pairs));
  }
  return out;
}

// Every structure on n vertices, loops included; n <= 3 keeps this at 512.
std::vector<BinaryStructure> allStructures(int n) {
  std::vector<BinaryStructure> out;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  out.reserve(std::size_t{1} << cells);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < cells; ++i)
      if ((code >> i) & 1)
        pairs.emplace_back(static_cast<int>(i) / n, static_cast<int>(i) % n);
    out.push_back(BinaryStructure::fromPairs(n, pairs));
  }
  return out;
}

// Every digraph on n vertices: per unordered pair, no arc / forward / back.
std::vector<BinaryStructure> allDigraphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;
  std::vector<BinaryStructure> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::pair<int, int>> pairs;
    std::uint64_t c = code;
    for (const auto& [a, b] : slots) {
      switch (c % 3) {
        case 1: pairs.emplace_back(a, b); break;
        case 2: pairs.emplace_back(b, a); break;
        default: break;
      }
      c /= 3;
    }
    out.push_back(BinaryStructure::fromPairs(n, pairs));
  }
  return out;
}

// Every irreflexive complete structure on n vertices: per unordered pair,
// forward / back / both.
std::vector<BinaryStructure> allCompleteIrreflexive(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;
  std::vector<BinaryStructure> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::pair<int, int>> pairs;
    std::uint64_t c = code;
    for (const auto& [a, b] : slots) {
      switch (c % 3) {
        case 0: pairs.emplace_back(a, b); break;
        case 1: pairs.emplace_back(b, a); break;
        default:
          pairs.emplace_back(a, b);
          pairs.emplace_back(b, a);
          break;
      }
      c /= 3;
    }
    out.push_back(BinaryStructure::fromPairs(n, pairs));
  }
  return out;
}

std::uint64_t relationCode(const BinaryStructure& x, const std::vector<int>& perm) {
  const int n = x.size();
  std::uint64_t code = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (x.has(a, b)) code |= std::uint64_t{1} << (perm[a] * n + perm[b]);
  return code;
}

// One representative per isomorphism class of connected structures with 1 to
// maxN vertices (maxN <= 3: permutation canonicalization stays cheap).
std::vector<BinaryStructure> connectedClassReps(int maxN) {
  std::vector<BinaryStructure> reps;
  for (int n = 1; n <= maxN; ++n) {
    std::set<std::uint64_t> seen;
    std::vector<int> perm(n);
    for (const BinaryStructure& x : allStructures(n)) {
      if (!isConnected(x)) continue;
      std::iota(perm.begin(), perm.end(), 0);
      std::uint64_t best = ~std::uint64_t{0};
      do {
        best = std::min(best, relationCode(x, perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(best).second) reps.push_back(x);
    }
  }
  return reps;
}

// All multisets of 1..maxParts indices drawn from [0, count), as
// nondecreasing index tuples.
std::vector<std::vector<int>> indexMultisets(int count, int maxParts) {
  std::vector<std::vector<int>> out;
  std::vector<int> tuple;
  auto grow = [&](auto&& self, int least) -> void {
    if (!tuple.empty()) out.push_back(tuple);
    if (static_cast<int>(tuple.size()) == maxParts) return;
    for (int i = least; i < count; ++i) {
      tuple.push_back(i);
      self(self, i);
      tuple.pop_back();
    }
  };
  grow(grow, 0);
  return out;
}

BinaryStructure unionOfReps(const std::vector<BinaryStructure>& reps,
                            const std::vector<int>& tuple) {
  std::vector<BinaryStructure> parts;
  parts.reserve(tuple.size());
  for (int i : tuple) parts.push_back(reps[i]);
  return disjointUnion(parts);
}

// ---- randomized generators ----

BinaryStructure randomConnectedPiece(SplitMix64& rng, int maxN, RandomClass cls) {
  const int n = 1 + static_cast<int>(rng.below(maxN));
  for (int attempt = 0; attempt < 100; ++attempt) {
    BinaryStructure x = randomStructure(n, rng.next(), cls);
    if (isConnected(x)) return x;
  }
  return fixture("Kn", {n});  // complete graphs are always connected
}

// Random partial order on e0..e{k-1}: arcs only from lower to higher index,
// so the reflexive-transitive closure is automatically antisymmetric.
FinitePoset randomPoset(SplitMix64& rng, int maxElements) {
  const int k = 1 + static_cast<int>(rng.below(maxElements));
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rng.below(3) == 0) rel.emplace_back(labels[i], labels[j]);
  return FinitePoset(std::move(labels), rel);
}

UPSet randomUPSet(SplitMix64& rng, bool forceInfinite) {
  const std::uint64_t period = 1 + rng.below(12);
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < period; ++r)
    if (rng.below(3) == 0) residues.push_back(r);
  if (forceInfinite && residues.empty()) residues.push_back(rng.below(period));
  const std::uint64_t threshold = rng.below(12);
  std::vector<std::uint64_t> prefix;
  for (std::uint64_t k = 0; k < threshold; ++k)
    if (rng.below(3) == 0) prefix.push_back(k);
  return UPSet(threshold, std::move(prefix), period, std::move(residues));
}

// Literal check that image is a relation-preserving bijection from x onto y.
bool isVertexIsomorphism(const BinaryStructure& x, const BinaryStructure& y,
                         const std::vector<int>& image) {
  const int n = x.size();
  if (y.size() != n || static_cast<int>(image.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : image) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (x.has(a, b) != y.has(image[a], image[b])) return false;
  return true;
}

// ---- suites, in roster order ----

// Criterion: on irreflexive disconnected structures, the component test
// (pairwise isomorphic, each ultrahomogeneous, each complete) and the direct
// one-point-extension check return the same verdict. Exhaustive through 4
// vertices, randomized at 5..7.
void suiteLemma9010(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  long long disconnected = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const BinaryStructure& x : allIrreflexive(n)) {
      if (isConnected(x)) continue;
      ++disconnected;
      const bool crit = componentCriterion(x).uh;
      const bool direct = isUltrahomogeneous(x).ultrahomogeneous;
      t.check(crit == direct, [&] {
        return "component criterion " + std::to_string(crit) +
               " vs direct check " + std::to_string(direct) + " on " +
               structText(x);
      });
    }
  }
  const long long exhaustive = t.cases;
  SplitMix64 rng{seed};
  for (int i = 0; i < 510; ++i) {
    const int n = 5 + static_cast<int>(rng.below(3));
    BinaryStructure x(0);
    if (i % 5 == 0) {
      // Stacks of one complete irreflexive piece, the shape that can come out
      // ultrahomogeneous; keeps the true branch exercised.
      const int k = (n % 3 == 0 && rng.coin()) ? n / 3 : (n % 2 == 0 ? n / 2 : n);
      const int m = n / k;
      const BinaryStructure piece =
          enlarge(randomStructure(k, rng.next(), RandomClass::Digraph));
      x = disjointUnion(std::vector<BinaryStructure>(m, piece));
      if (m == 1) {
        // n is prime and the coin forced k = n; fall back to isolated points.
        x = BinaryStructure(n);
      }
    } else {
      const int n1 = 1 + static_cast<int>(rng.below(n - 1));
      x = disjointUnion({randomStructure(n1, rng.next(), RandomClass::Irreflexive),
                         randomStructure(n - n1, rng.next(),
                                         RandomClass::Irreflexive)});
    }
    const bool crit = componentCriterion(x).uh;
    const bool direct = isUltrahomogeneous(x).ultrahomogeneous;
    t.check(crit == direct, [&] {
      return "component criterion " + std::to_string(crit) +
             " vs direct check " + std::to_string(direct) + " on " +
             structText(x);
    });
  }
  std::ostringstream d;
  d << "exhaustive: " << exhaustive << " disconnected irreflexive structures ("
    << disconnected << " found through 4 vertices); random: "
    << (t.cases - exhaustive) << " at sizes 5..7";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: orientation(enlarge(y)) = y on every digraph through 4 vertices
// and enlarge(orientation(x)) = x on every irreflexive complete structure
// through 4 vertices, both as literal equalities.
void suiteLemma9014(std::uint64_t, VerifyResult& r) {
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    for (const BinaryStructure& y : allDigraphs(n))
      t.check(orientation(enlarge(y)) == y, [&] {
        return "orientation(enlarge(y)) != y for " + structText(y);
      });
    for (const BinaryStructure& x : allCompleteIrreflexive(n))
      t.check(enlarge(orientation(x)) == x, [&] {
        return "enlarge(orientation(x)) != x for " + structText(x);
      });
  }
  std::ostringstream d;
  d << "both directions exhaustive through 4 vertices: " << t.cases << " checks";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: for every ultrahomogeneous digraph through 4 vertices, every
// multiplicity 2..4 and every non-biconnected variant, decompose undoes
// reconstruct: exact multiplicity, a digraph isomorphic to the original and a
// witness bijection that is revalidated here. Plus the stacked-complete-graph
// sweep decompose(m disjoint copies of K_n) = (plain, n isolated points, m).
void suiteTheorem9017(std::uint64_t, VerifyResult& r) {
  Tally t;
  std::vector<BinaryStructure> uhDigraphs;
  long long censusTotal = 0;
  for (int n = 1; n <= 4; ++n)
    for (const BinaryStructure& y : allDigraphs(n)) {
      ++censusTotal;
      if (isUltrahomogeneous(y).ultrahomogeneous) uhDigraphs.push_back(y);
    }
  const Variant variants[] = {Variant::Plain, Variant::Re, Variant::C,
                              Variant::ReC};
  for (const BinaryStructure& y : uhDigraphs)
    for (int kappa = 2; kappa <= 4; ++kappa)
      for (Variant v : variants) {
        const BinaryStructure x = reconstruct(v, y, kappa);
        const DecompositionReport rep = decompose(x);
        const bool ok =
            rep.multiplicity && *rep.multiplicity == kappa && rep.digraph &&
            isomorphic(*rep.digraph, y) && rep.witness &&
            isVertexIsomorphism(
                reconstruct(rep.variant, *rep.digraph, *rep.multiplicity), x,
                *rep.witness);
        t.check(ok, [&] {
          return "round trip failed for " + variantName(v) + " kappa=" +
                 std::to_string(kappa) + " y=" + structText(y);
        });
      }
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const DecompositionReport rep = decompose(fixture("mKn", {m, n}));
      const bool ok = rep.variant == Variant::Plain && rep.multiplicity &&
                      *rep.multiplicity == m && rep.digraph &&
                      *rep.digraph == BinaryStructure(n);
      t.check(ok, [&] {
        return "decompose(mKn) m=" + std::to_string(m) + " n=" +
               std::to_string(n) + " gave variant " + variantName(rep.variant);
      });
    }
  std::ostringstream d;
  d << uhDigraphs.size() << " ultrahomogeneous digraphs of " << censusTotal
    << " through 4 vertices; " << t.cases << " round trips and sweeps";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: self-embeddings are unchanged by complement and inverse (also
// checked for partial isomorphisms and the ultrahomogeneity verdict), by
// reflexification on irreflexive inputs, and by enlargement on digraphs; and
// enlarge(y) = complement(reflexify(inverse(y))) on every digraph through 4
// vertices.
void suiteFact9011(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  for (int n = 1; n <= 4; ++n)
    for (const BinaryStructure& y : allDigraphs(n)) {
      t.check(enlarge(y) == complement(reflexify(inverse(y))), [&] {
        return "enlarge identity failed for " + structText(y);
      });
      const BinaryStructure e = enlarge(y);
      t.check(embeddings(y, y) == embeddings(e, e) &&
                  copies(y, y) == copies(e, e),
              [&] { return "embeddings changed by enlarge for " + structText(y); });
    }
  const long long exhaustive = t.cases;
  SplitMix64 rng{seed};
  for (int i = 0; i < 250; ++i) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const BinaryStructure x = randomStructure(n, rng.next(), RandomClass::Any);
    const BinaryStructure xc = complement(x);
    const BinaryStructure xi = inverse(x);
    const auto ex = embeddings(x, x);
    t.check(ex == embeddings(xc, xc) && ex == embeddings(xi, xi), [&] {
      return "self-embeddings changed by complement or inverse for " +
             structText(x);
    });
    const auto px = partialIsomorphisms(x, n);
    t.check(px == partialIsomorphisms(xc, n) && px == partialIsomorphisms(xi, n),
            [&] {
              return "partial isomorphisms changed by complement or inverse "
                     "for " + structText(x);
            });
    const bool ux = isUltrahomogeneous(x).ultrahomogeneous;
    t.check(ux == isUltrahomogeneous(xc).ultrahomogeneous &&
                ux == isUltrahomogeneous(xi).ultrahomogeneous,
            [&] {
              return "ultrahomogeneity verdict changed by complement or "
                     "inverse for " + structText(x);
            });
  }
  for (int i = 0; i < 250; ++i) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const BinaryStructure x =
        randomStructure(n, rng.next(), RandomClass::Irreflexive);
    const BinaryStructure xr = reflexify(x);
    t.check(embeddings(x, x) == embeddings(xr, xr), [&] {
      return "self-embeddings changed by reflexification for " + structText(x);
    });
  }
  std::ostringstream d;
  d << "enlarge identity and embedding invariance exhaustive on digraphs "
       "through 4 vertices (" << exhaustive << " checks); random: 500 "
       "structures at sizes 1..5";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: for every enumerated embedding f and source vertex x, f maps the
// component of x inside one component of the host, restricts to an
// isomorphism between the component of x and its image, and hits the whole
// component of f(x) when f is bijective.
void suiteFact4005(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  SplitMix64 rng{seed};
  long long embeddingsChecked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    BinaryStructure y(0), x(0);
    if (iter % 2 == 0) {
      const int ny = 2 + static_cast<int>(rng.below(4));
      y = randomStructure(ny, rng.next(), RandomClass::Any);
      const int nx = 1 + static_cast<int>(rng.below(ny));
      // random nx-subset of y's vertices
      std::vector<int> all(ny);
      std::iota(all.begin(), all.end(), 0);
      for (int k = ny - 1; k > 0; --k)
        std::swap(all[k], all[rng.below(k + 1)]);
      std::vector<int> chosen(all.begin(), all.begin() + nx);
      std::sort(chosen.begin(), chosen.end());
      x = y.induced(chosen);
    } else {
      x = randomStructure(1 + static_cast<int>(rng.below(5)), rng.next(),
                          RandomClass::Any);
      y = randomStructure(1 + static_cast<int>(rng.below(5)), rng.next(),
                          RandomClass::Any);
    }
    const ComponentPartition cx = components(x);
    const ComponentPartition cy = components(y);
    bool pairOk = true;
    std::string note;
    for (const PartialMap& f : embeddings(x, y)) {
      ++embeddingsChecked;
      for (int v = 0; v < x.size() && pairOk; ++v) {
        const std::vector<int>& sourceBlock = cx.blocks[cx.blockOf[v]];
        std::vector<int> image;
        for (int u : sourceBlock) image.push_back(*f.image(u));
        std::sort(image.begin(), image.end());
        const std::vector<int>& hostBlock =
            cy.blocks[cy.blockOf[*f.image(v)]];
        if (!std::includes(hostBlock.begin(), hostBlock.end(), image.begin(),
                           image.end())) {
          pairOk = false;
          note = "component image escapes the host component";
          break;
        }
        if (!isomorphic(x.induced(sourceBlock), y.induced(image))) {
          pairOk = false;
          note = "restriction to a component is not an isomorphism onto its "
                 "image";
          break;
        }
        if (x.size() == y.size() && image != hostBlock) {
          pairOk = false;
          note = "bijective embedding misses part of the host component";
          break;
        }
      }
      if (!pairOk) break;
    }
    t.check(pairOk, [&] {
      return note + " with x: " + structText(x) + " y: " + structText(y);
    });
  }
  std::ostringstream d;
  d << "300 random pairs at sizes 1..5, " << embeddingsChecked
    << " embeddings checked clause by clause";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: the component route for copies agrees with the direct embedding
// enumeration on the full cross of class representatives (sources with up to
// 2 connected components of up to 3 vertices, hosts with up to 3), plus
// random labelled and larger cases. Agreement on one labelling of a pair
// settles every relabelling, since both routes commute with relabelling.
void suiteFact4015(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  const std::vector<BinaryStructure> reps = connectedClassReps(3);
  std::vector<BinaryStructure> sources, hosts;
  for (const auto& tuple : indexMultisets(static_cast<int>(reps.size()), 2))
    sources.push_back(unionOfReps(reps, tuple));
  for (const auto& tuple : indexMultisets(static_cast<int>(reps.size()), 3))
    hosts.push_back(unionOfReps(reps, tuple));
  for (const BinaryStructure& x : sources)
    for (const BinaryStructure& y : hosts)
      t.check(copies(x, y) == copiesViaComponents(x, y), [&] {
        return "routes disagree for x: " + structText(x) +
               " y: " + structText(y);
      });
  const long long exhaustive = t.cases;
  SplitMix64 rng{seed};
  for (int i = 0; i < 300; ++i) {
    // Larger than the exhaustive universe: component sizes up to 4.
    std::vector<BinaryStructure> xParts, yParts;
    const int xCount = 1 + static_cast<int>(rng.below(2));
    const int yCount = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < xCount; ++k)
      xParts.push_back(randomConnectedPiece(rng, 4, RandomClass::Any));
    for (int k = 0; k < yCount; ++k)
      yParts.push_back(randomConnectedPiece(rng, 4, RandomClass::Any));
    const BinaryStructure x = disjointUnion(xParts);
    const BinaryStructure y = disjointUnion(yParts);
    t.check(copies(x, y) == copiesViaComponents(x, y), [&] {
      return "routes disagree for x: " + structText(x) + " y: " + structText(y);
    });
  }
  std::ostringstream d;
  d << reps.size() << " connected classes through 3 vertices; exhaustive "
    << "cross: " << exhaustive << " source/host pairs; random larger: 300";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Shuffles a poset onto fresh labels, giving an isomorphic copy.
FinitePoset shuffledCopy(SplitMix64& rng, const FinitePoset& p) {
  const std::size_t k = p.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = k; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = "f" + std::to_string(i);
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (p.leq(a, b)) rel.emplace_back(labels[perm[a]], labels[perm[b]]);
  return FinitePoset(std::move(labels), rel);
}

// Criterion: atom existence agrees among a poset, its separative
// modification and its separative quotient; isomorphisms transport to the
// quotients and the modified orders; the modification distributes over
// binary products exactly and the quotient up to isomorphism.
void suiteFact4042(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  SplitMix64 rng{seed};
  for (int iter = 0; iter < 300; ++iter) {
    const FinitePoset p = randomPoset(rng, 6);
    const FinitePreorder sm = separativeModification(p);
    const FinitePoset sq = separativeQuotient(p);
    const bool hasAtomP = !atoms(p).empty();
    t.check(hasAtomP == !atoms(sm).empty() && hasAtomP == !atoms(sq).empty(),
            [&] { return "atom existence disagrees on a poset of size " +
                         std::to_string(p.size()); });
    const FinitePoset q = shuffledCopy(rng, p);
    const auto witness = posetIsomorphic(p, q);
    bool transported = witness.has_value();
    if (transported) {
      transported = posetIsomorphic(separativeQuotient(p), separativeQuotient(q))
                        .has_value();
      const FinitePreorder smQ = separativeModification(q);
      for (std::size_t a = 0; a < p.size() && transported; ++a)
        for (std::size_t b = 0; b < p.size() && transported; ++b)
          transported = sm.leq(a, b) == smQ.leq((*witness)[a], (*witness)[b]);
    }
    t.check(transported, [&] {
      return "isomorphism transport failed on a poset of size " +
             std::to_string(p.size());
    });
    const FinitePoset a = randomPoset(rng, 5);
    const FinitePoset b = randomPoset(rng, 5);
    const FinitePoset ab = product({a, b});
    t.check(separativeModification(ab) ==
                product({separativeModification(a), separativeModification(b)}),
            [&] {
              return "modification does not distribute over a product of "
                     "sizes " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size());
            });
    t.check(posetIsomorphic(separativeQuotient(ab),
                            product({separativeQuotient(a),
                                     separativeQuotient(b)}))
                .has_value(),
            [&] {
              return "quotient of a product is not isomorphic to the product "
                     "of quotients at sizes " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size());
            });
  }
  std::ostringstream d;
  d << "300 random posets through 6 elements, product factors through 5";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: separative quotients are separative, taking the quotient twice
// changes nothing up to isomorphism, and every finite chain collapses to a
// single point.
void suiteSqAlgebra(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  SplitMix64 rng{seed};
  for (int iter = 0; iter < 300; ++iter) {
    const FinitePoset p = randomPoset(rng, 6);
    const FinitePoset sq = separativeQuotient(p);
    t.check(isSeparative(sq), [&] {
      return "quotient is not separative for a poset of size " +
             std::to_string(p.size());
    });
    t.check(posetIsomorphic(separativeQuotient(sq), sq).has_value(), [&] {
      return "quotient is not idempotent for a poset of size " +
             std::to_string(p.size());
    });
  }
  for (int k = 1; k <= 8; ++k) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < k; ++i) labels.push_back("c" + std::to_string(i));
    for (int i = 0; i + 1 < k; ++i) rel.emplace_back(labels[i], labels[i + 1]);
    const FinitePoset chain(std::move(labels), rel);
    t.check(separativeQuotient(chain).size() == 1, [&] {
      return "chain of length " + std::to_string(k) +
             " does not collapse to a point";
    });
  }
  std::ostringstream d;
  d << "300 random posets through 6 elements plus chains of length 1..8";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: boolean operations on ultimately periodic sets agree pointwise
// with their defining formulas on the window [0, t + 2 lcm), which determines
// such sets completely, and the almost-inclusion and compatibility decisions
// agree with finiteness read off the window.
void suiteUpsetSoundness(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  SplitMix64 rng{seed};
  for (int iter = 0; iter < 1000; ++iter) {
    const UPSet a = randomUPSet(rng, false);
    const UPSet b = randomUPSet(rng, false);
    const UPSet u = unionOf(a, b);
    const UPSet i = intersect(a, b);
    const UPSet d = difference(a, b);
    const UPSet c = complement(a);
    const std::uint64_t lcmAB = std::lcm(a.period(), b.period());
    const std::uint64_t tMax = std::max(a.threshold(), b.threshold());
    t.check(lcmAB % u.period() == 0 && lcmAB % i.period() == 0 &&
                lcmAB % d.period() == 0 && a.period() % c.period() == 0 &&
                u.threshold() <= tMax && i.threshold() <= tMax &&
                d.threshold() <= tMax && c.threshold() <= a.threshold(),
            [&] { return "canonical fields escape the combination bounds"; });
    const std::uint64_t window = tMax + 2 * lcmAB;
    bool pointwise = true;
    for (std::uint64_t k = 0; k < window && pointwise; ++k) {
      const bool inA = a.contains(k);
      const bool inB = b.contains(k);
      pointwise = u.contains(k) == (inA || inB) &&
                  i.contains(k) == (inA && inB) &&
                  d.contains(k) == (inA && !inB) && c.contains(k) == !inA;
    }
    t.check(pointwise, [&] {
      return "pointwise disagreement below " + std::to_string(window) +
             " for " + render(a) + " and " + render(b);
    });
    bool differenceEventuallyEmpty = true;
    bool intersectionEventuallyHits = false;
    for (std::uint64_t k = tMax; k < tMax + lcmAB; ++k) {
      if (a.contains(k) && !b.contains(k)) differenceEventuallyEmpty = false;
      if (a.contains(k) && b.contains(k)) intersectionEventuallyHits = true;
    }
    t.check(almostSubset(a, b) == differenceEventuallyEmpty, [&] {
      return "almost inclusion disagrees with the window for " + render(a) +
             " and " + render(b);
    });
    t.check(compatible(a, b) == intersectionEventuallyHits, [&] {
      return "compatibility disagrees with the window for " + render(a) +
             " and " + render(b);
    });
  }
  std::ostringstream d;
  d << "1000 random pairs, four operations plus two decisions each, windows "
       "of size threshold + 2 lcm";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: the sampled decision for "below modulo the order" coincides with
// almost inclusion on infinite sets, and every negative verdict carries an
// infinite witness inside the left side and incompatible with the right.
void suiteClaim2(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  SplitMix64 rng{seed};
  long long negatives = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const UPSet a = randomUPSet(rng, true);
    UPSet b = randomUPSet(rng, true);
    if (iter % 3 == 0) b = unionOf(a, b);  // force a healthy share of positives
    const SmLeqVerdict v = smLeqWitness(a, b);
    t.check(v.leq == almostSubset(a, b), [&] {
      return "verdict disagrees with almost inclusion for " + render(a) +
             " and " + render(b);
    });
    if (!v.leq) {
      ++negatives;
      const bool witnessOk = v.witness && v.witness->infinite() &&
                             almostSubset(*v.witness, a) &&
                             !compatible(*v.witness, b);
      t.check(witnessOk, [&] {
        return "negative verdict witness fails for " + render(a) + " and " +
               render(b);
      });
    }
  }
  std::ostringstream d;
  d << "500 random infinite pairs, " << negatives
    << " negative verdicts with validated witnesses";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: splitting an infinite set yields two disjoint infinite pieces
// whose union gives the set back, the executable core of the atomlessness
// construction.
void suiteSplitAtomless(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  SplitMix64 rng{seed};
  for (int iter = 0; iter < 300; ++iter) {
    const UPSet a = randomUPSet(rng, true);
    const auto [left, right] = split(a);
    const bool ok = left.infinite() && right.infinite() &&
                    intersect(left, right).isEmpty() &&
                    unionOf(left, right) == a;
    t.check(ok, [&] { return "split fails for " + render(a); });
  }
  std::ostringstream d;
  d << "300 random infinite sets split into validated halves";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

// Criterion: a finite structure has exactly one copy of itself, namely
// itself, so the inclusion order on copies of a finite disjoint union is a
// point and trivially the power of the order for one part.
void suiteCopiesCollapse(std::uint64_t seed, VerifyResult& r) {
  Tally t;
  SplitMix64 rng{seed};
  for (int iter = 0; iter < 500; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const BinaryStructure x = randomStructure(n, rng.next(), RandomClass::Any);
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 0);
    t.check(copies(x, x) == CopySet{full}, [&] {
      return "copies(x, x) is not the single full set for " + structText(x);
    });
  }
  for (int iter = 0; iter < 50; ++iter) {
    const BinaryStructure piece = randomConnectedPiece(rng, 3, RandomClass::Any);
    const int kappa = 2 + static_cast<int>(rng.below(2));
    const BinaryStructure x =
        disjointUnion(std::vector<BinaryStructure>(kappa, piece));
    const FinitePoset whole = inclusionPoset(copies(x, x));
    const FinitePoset part = inclusionPoset(copies(piece, piece));
    const bool ok = whole.size() == 1 &&
                    posetIsomorphic(whole, product(std::vector<FinitePoset>(
                                               kappa, part)))
                        .has_value();
    t.check(ok, [&] {
      return "copy order of a stack is not the power of the part order for " +
             structText(piece);
    });
  }
  std::ostringstream d;
  d << "500 random structures at sizes 1..6 plus 50 stacked unions";
  if (t.mismatches) d << "; first mismatch: " << t.first;
  r.cases = t.cases;
  r.mismatches = t.mismatches;
  r.detail = d.str();
}

struct SuiteInfo {
  const char* name;
  const char* claim;
  void (*run)(std::uint64_t, VerifyResult&);
};

constexpr SuiteInfo kSuites[] = {
    {"lemma-9010", "Lemma-9010-oracle", suiteLemma9010},
    {"lemma-9014", "Lemma-9014-duality", suiteLemma9014},
    {"theorem-9017", "Theorem-9017-roundtrip", suiteTheorem9017},
    {"fact-9011", "Fact-9011-identities", suiteFact9011},
    {"fact-4005", "Fact-4005-clauses", suiteFact4005},
    {"fact-4015", "Fact-4015-oracle", suiteFact4015},
    {"fact-4042", "Fact-4042-bde", suiteFact4042},
    {"sq-algebra", "Fact-4042-sq-algebra", suiteSqAlgebra},
    {"upset-soundness", "EX9002-fragment-soundness", suiteUpsetSoundness},
    {"claim-2", "Claim-2-fragment", suiteClaim2},
    {"split-atomless", "Theorem-4024b-witness", suiteSplitAtomless},
    {"copies-collapse", "Theorem-4024a-collapse", suiteCopiesCollapse},
};

}  // namespace

std::vector<std::string> verifySuiteNames() {
  std::vector<std::string> names;
  for (const SuiteInfo& s : kSuites) names.push_back(s.name);
  return names;
}

bool isVerifySuiteName(const std::string& name) {
  for (const SuiteInfo& s : kSuites)
    if (name == s.name) return true;
  return false;
}

VerifyResult runVerifySuite(const std::string& name, std::uint64_t seed) {
  for (int i = 0; i < static_cast<int>(std::size(kSuites)); ++i) {
    if (name != kSuites[i].name) continue;
    VerifyResult r;
    r.suite = kSuites[i].name;
    r.claim = kSuites[i].claim;
    kSuites[i].run(suiteSeed(seed, i), r);
    r.passed = r.mismatches == 0;
    return r;
  }
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

std::vector<VerifyResult> runAllVerifySuites(std::uint64_t seed) {
  std::vector<VerifyResult> out;
  for (const SuiteInfo& s : kSuites) out.push_back(runVerifySuite(s.name, seed));
  return out;
}

}  // namespace homogkit
