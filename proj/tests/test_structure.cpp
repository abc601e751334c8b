#include <doctest/doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "homogkit/fixtures.hpp"
#include "homogkit/structure.hpp"
#include "oracle.hpp"

using homogkit::BinaryStructure;
using PairVec = std::vector<std::pair<int, int>>;

namespace {

BinaryStructure relabel(const BinaryStructure& x, const std::vector<int>& perm) {
  PairVec mapped;
  for (const auto& [a, b] : x.pairs()) mapped.emplace_back(perm[a], perm[b]);
  return BinaryStructure::fromPairs(x.size(), mapped);
}

}  // namespace

TEST_CASE("construction and basic accessors") {
  const BinaryStructure x(3, {{0, 1}, {1, 2}, {1, 2}});
  CHECK(x.size() == 3);
  CHECK(x.pairCount() == 2);  // duplicate collapses
  CHECK(x.has(0, 1));
  CHECK_FALSE(x.has(1, 0));
  CHECK(x.pairs() == PairVec{{0, 1}, {1, 2}});

  const BinaryStructure empty(0);
  CHECK(empty.size() == 0);
  CHECK(empty.pairCount() == 0);

  CHECK_THROWS_WITH_AS(BinaryStructure::fromPairs(3, {{0, 3}}),
                       "pair [0,3] out of range for n=3", std::invalid_argument);
  CHECK_THROWS_WITH_AS(BinaryStructure::fromPairs(2, {{-1, 0}}),
                       "pair [-1,0] out of range for n=2", std::invalid_argument);
  CHECK_THROWS_AS(BinaryStructure::fromPairs(-1, {}), std::invalid_argument);
}

TEST_CASE("induced substructure relabels by ascending order") {
  const BinaryStructure x(4, {{0, 2}, {2, 3}, {3, 0}, {1, 1}});
  const BinaryStructure sub = x.induced({3, 0, 2});
  // {0,2,3} sorted; 0->0, 2->1, 3->2
  CHECK(sub.size() == 3);
  CHECK(sub.pairs() == PairVec{{0, 1}, {1, 2}, {2, 0}});

  CHECK_THROWS_AS(x.induced({0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(x.induced({1, 1}), std::invalid_argument);
}

TEST_CASE("transforms of a single arc on three vertices") {
  const BinaryStructure x(3, {{0, 1}});

  CHECK(homogkit::inverse(x).pairs() == PairVec{{1, 0}});
  CHECK(homogkit::reflexify(x).pairs() ==
        PairVec{{0, 0}, {0, 1}, {1, 1}, {2, 2}});
  CHECK(homogkit::irreflexify(homogkit::reflexify(x)) == x);
  CHECK(homogkit::rsRelation(x).pairs() ==
        PairVec{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}});
  CHECK(homogkit::enlarge(x).pairs() ==
        PairVec{{0, 1}, {0, 2}, {1, 2}, {2, 0}, {2, 1}});

  const auto comp = homogkit::complement(x);
  CHECK(comp.pairCount() == 8);
  CHECK_FALSE(comp.has(0, 1));
  CHECK(comp.has(1, 0));
  CHECK(comp.has(0, 0));
}

TEST_CASE("transforms agree with set-level reference on random input") {
  homogkit::SplitMix64 rng{0x5eedULL};
  for (int iter = 0; iter < 120; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const auto cls = static_cast<homogkit::RandomClass>(rng.below(4));
    const auto x = homogkit::randomStructure(n, rng.next(), cls);
    const auto raw = oracle::pairSet(x);

    CHECK(oracle::pairSet(homogkit::complement(x)) ==
          oracle::complementSet(n, raw));
    CHECK(oracle::pairSet(homogkit::inverse(x)) == oracle::inverseSet(raw));
    CHECK(oracle::pairSet(homogkit::reflexify(x)) ==
          oracle::reflexifySet(n, raw));
    CHECK(oracle::pairSet(homogkit::irreflexify(x)) ==
          oracle::irreflexifySet(raw));
    CHECK(oracle::pairSet(homogkit::enlarge(x)) == oracle::enlargeSet(n, raw));
    CHECK(oracle::pairSet(homogkit::rsRelation(x)) == oracle::rsSet(n, raw));
  }
}

TEST_CASE("complement and inverse are involutions, enlarge is idempotent") {
  homogkit::SplitMix64 rng{0xabcdULL};
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const auto x = homogkit::randomStructure(n, rng.next(),
                                             homogkit::RandomClass::Any);
    CHECK(homogkit::complement(homogkit::complement(x)) == x);
    CHECK(homogkit::inverse(homogkit::inverse(x)) == x);
    CHECK(homogkit::enlarge(homogkit::enlarge(x)) == homogkit::enlarge(x));
  }
}

TEST_CASE("disjoint union offsets parts") {
  const auto k2 = homogkit::fixture("Kn", {2});
  const auto u = homogkit::disjointUnion({k2, k2, k2});
  CHECK(u.size() == 6);
  CHECK(u.pairs() == PairVec{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}});
  CHECK_THROWS_WITH_AS(homogkit::disjointUnion({}),
                       "disjointUnion: empty part sequence",
                       std::invalid_argument);
}

TEST_CASE("components") {
  const auto c3 = homogkit::fixture("C3", {});
  CHECK(homogkit::components(c3).blocks ==
        std::vector<std::vector<int>>{{0, 1, 2}});

  const auto two = homogkit::fixture("mKn", {2, 3});
  const auto part = homogkit::components(two);
  CHECK(part.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(part.blockOf == std::vector<int>{0, 0, 0, 1, 1, 1});

  // Isolated vertices are singleton blocks even with loops present.
  const BinaryStructure loops(3, {{0, 0}, {2, 2}});
  CHECK(homogkit::components(loops).blocks ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});

  // One-way arcs connect: a 4-cycle of arcs is one component.
  const BinaryStructure arc4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(homogkit::components(arc4).blocks.size() == 1);
}

TEST_CASE("components agree with union-find on random structures") {
  homogkit::SplitMix64 rng{0xc0ffeeULL};
  for (int iter = 0; iter < 120; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const auto x = homogkit::randomStructure(n, rng.next(),
                                             homogkit::RandomClass::Any);
    const auto part = homogkit::components(x);
    CHECK(part.blocks == oracle::componentsUnionFind(x));
    for (std::size_t b = 0; b < part.blocks.size(); ++b)
      for (const int v : part.blocks[b])
        CHECK(part.blockOf[v] == static_cast<int>(b));
  }
}

TEST_CASE("predicates on the named fixtures") {
  const auto c3 = homogkit::fixture("C3", {});
  auto p = homogkit::predicates(c3);
  CHECK(p.irreflexive);
  CHECK_FALSE(p.graph);
  CHECK(p.digraph);
  CHECK(p.tournament);
  CHECK(p.complete);
  CHECK(p.connected);
  CHECK(p.biconnected);

  p = homogkit::predicates(homogkit::fixture("Kn", {4}));
  CHECK(p.graph);
  CHECK(p.complete);
  CHECK(p.connected);
  CHECK_FALSE(p.digraph);
  CHECK_FALSE(p.biconnected);  // complement is edgeless

  p = homogkit::predicates(homogkit::fixture("mKn", {2, 3}));
  CHECK(p.graph);
  CHECK_FALSE(p.connected);
  CHECK_FALSE(p.complete);
  CHECK_FALSE(p.biconnected);

  p = homogkit::predicates(homogkit::fixture("Cn", {5}));
  CHECK(p.graph);
  CHECK(p.connected);
  CHECK(p.biconnected);  // the complement of a 5-cycle is again a 5-cycle
  CHECK_FALSE(p.complete);

  p = homogkit::predicates(homogkit::fixture("Kmn", {3, 3}));
  CHECK(p.graph);
  CHECK(p.connected);
  CHECK_FALSE(p.biconnected);  // complement is 2K_3

  p = homogkit::predicates(homogkit::fixture("Ln", {3}));
  CHECK(p.digraph);
  CHECK(p.tournament);
  CHECK(p.connected);

  p = homogkit::predicates(homogkit::reflexify(homogkit::fixture("Kn", {2})));
  CHECK(p.reflexive);
  CHECK_FALSE(p.irreflexive);
  CHECK(p.complete);

  p = homogkit::predicates(BinaryStructure(0));
  CHECK_FALSE(p.connected);  // no components at all
}

TEST_CASE("isomorphism finds maps and rejects non-isomorphic pairs") {
  const auto c3 = homogkit::fixture("C3", {});
  const auto c3rev = homogkit::inverse(c3);
  const auto iso = homogkit::isomorphism(c3, c3rev);
  REQUIRE(iso.has_value());
  // Lexicographically least image vector that reverses the cycle.
  CHECK(*iso == std::vector<int>{0, 2, 1});

  CHECK(homogkit::isomorphic(homogkit::fixture("Pn", {3}),
                             homogkit::fixture("Pn", {3})));
  CHECK_FALSE(homogkit::isomorphic(homogkit::fixture("Pn", {3}),
                                   homogkit::fixture("Kn", {3})));
  CHECK_FALSE(homogkit::isomorphic(homogkit::fixture("Kn", {3}),
                                   homogkit::fixture("Kn", {4})));
  CHECK(homogkit::isomorphism(BinaryStructure(0), BinaryStructure(0)).has_value());

  // A loop is an invariant.
  CHECK_FALSE(homogkit::isomorphic(BinaryStructure(1, {{0, 0}}),
                                   BinaryStructure(1)));
}

TEST_CASE("isomorphism survives random relabelling") {
  homogkit::SplitMix64 rng{0x150717ULL};
  for (int iter = 0; iter < 80; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const auto x = homogkit::randomStructure(n, rng.next(),
                                             homogkit::RandomClass::Any);
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    for (int v = n - 1; v > 0; --v)
      std::swap(perm[v], perm[rng.below(static_cast<std::uint64_t>(v) + 1)]);
    const auto y = relabel(x, perm);
    const auto iso = homogkit::isomorphism(x, y);
    REQUIRE(iso.has_value());
    std::vector<int> domain(n);
    for (int v = 0; v < n; ++v) domain[v] = v;
    CHECK(oracle::preservesBothWays(x, y, domain, *iso));
  }
}

TEST_CASE("fixture catalogue") {
  CHECK(homogkit::fixture("An", {3}).pairCount() == 0);
  CHECK(homogkit::fixture("Kn", {3}).pairCount() == 6);
  CHECK(homogkit::fixture("mKn", {1, 3}) == homogkit::fixture("Kn", {3}));
  CHECK(homogkit::fixture("mKn", {2, 3}).size() == 6);
  CHECK(homogkit::fixture("Cn", {3}) == homogkit::fixture("Kn", {3}));
  CHECK(homogkit::fixture("Cn", {4}).pairs() ==
        PairVec{{0, 1}, {0, 3}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}});
  CHECK(homogkit::fixture("Ln", {3}).pairs() ==
        PairVec{{0, 1}, {0, 2}, {1, 2}});
  CHECK(homogkit::fixture("Pn", {3}).pairs() ==
        PairVec{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(homogkit::fixture("Kmn", {1, 2}).pairs() ==
        PairVec{{0, 1}, {0, 2}, {1, 0}, {2, 0}});
  CHECK(homogkit::fixture("C3", {}).pairs() == PairVec{{0, 1}, {1, 2}, {2, 0}});

  CHECK_THROWS_AS(homogkit::fixture("Qn", {3}), std::invalid_argument);
  CHECK_THROWS_AS(homogkit::fixture("Cn", {2}), std::invalid_argument);
  CHECK_THROWS_AS(homogkit::fixture("mKn", {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(homogkit::fixture("Kn", {}), std::invalid_argument);

  const auto names = homogkit::fixtureNames();
  CHECK(std::find(names.begin(), names.end(), "mKn") != names.end());
  CHECK(std::find(names.begin(), names.end(), "Cn") != names.end());
}

TEST_CASE("random structures are deterministic and land in their class") {
  using homogkit::RandomClass;
  const auto a = homogkit::randomStructure(5, 42, RandomClass::Graph);
  const auto b = homogkit::randomStructure(5, 42, RandomClass::Graph);
  CHECK(a == b);
  CHECK(a != homogkit::randomStructure(5, 43, RandomClass::Graph));

  homogkit::SplitMix64 rng{7};
  for (int iter = 0; iter < 60; ++iter) {
    const int n = static_cast<int>(rng.below(6));
    const auto seed = rng.next();
    const auto ir =
        homogkit::predicates(homogkit::randomStructure(n, seed, RandomClass::Irreflexive));
    CHECK(ir.irreflexive);
    const auto g =
        homogkit::predicates(homogkit::randomStructure(n, seed, RandomClass::Graph));
    CHECK(g.irreflexive);
    const auto gx = homogkit::randomStructure(n, seed, RandomClass::Graph);
    CHECK(homogkit::inverse(gx) == gx);
    const auto dg = homogkit::randomStructure(n, seed, RandomClass::Digraph);
    const auto dp = homogkit::predicates(dg);
    CHECK((n == 0 || dp.digraph || dg.pairCount() == 0));
    for (const auto& [s, t] : dg.pairs()) CHECK_FALSE(dg.has(t, s));
  }

  CHECK(homogkit::randomClassFromName("graph") == RandomClass::Graph);
  CHECK_FALSE(homogkit::randomClassFromName("widget").has_value());
  CHECK(homogkit::randomClassName(RandomClass::Any) == "any");
}
