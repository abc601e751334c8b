#include <doctest/doctest.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homogkit/embedding.hpp"
#include "homogkit/fixtures.hpp"
#include "homogkit/poset.hpp"

using homogkit::FinitePoset;
using homogkit::FinitePreorder;
using Rel = std::vector<std::pair<std::string, std::string>>;

namespace {

FinitePoset chain(int length) {
  std::vector<std::string> elements;
  Rel rel;
  for (int i = 0; i < length; ++i) {
    elements.push_back("c" + std::to_string(i));
    if (i) rel.emplace_back(elements[i - 1], elements[i]);
  }
  return FinitePoset(elements, rel);
}

FinitePoset antichain(int width) {
  std::vector<std::string> elements;
  for (int i = 0; i < width; ++i) elements.push_back("e" + std::to_string(i));
  return FinitePoset(elements, {});
}

// One bottom below two incomparable tops.
FinitePoset vee() {
  return FinitePoset({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
}

// All nonempty subsets of a 3-element set, ordered by inclusion.
FinitePoset booleanThree() {
  return homogkit::inclusionPoset(
      {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
}

FinitePoset randomPoset(homogkit::SplitMix64& rng, int n) {
  std::vector<std::string> elements;
  for (int i = 0; i < n; ++i) elements.push_back("p" + std::to_string(i));
  Rel rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(3) == 0) rel.emplace_back(elements[i], elements[j]);
  return FinitePoset(elements, rel);
}

bool validIso(const FinitePoset& p, const FinitePoset& q,
              const std::vector<std::size_t>& img) {
  if (img.size() != p.size()) return false;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(img[a], img[b])) return false;
  return true;
}

}  // namespace

TEST_CASE("preorders close the given relation") {
  const FinitePreorder p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leqByLabel("a", "c"));  // transitivity
  CHECK(p.leqByLabel("b", "b"));  // reflexivity
  CHECK_FALSE(p.leqByLabel("c", "a"));
  CHECK(p.indexOf("b") == 1);
  CHECK_THROWS_WITH_AS(p.indexOf("z"), "unknown element 'z'",
                       std::invalid_argument);
  CHECK(p.relationPairs() == Rel{{"a", "a"},
                                 {"a", "b"},
                                 {"a", "c"},
                                 {"b", "b"},
                                 {"b", "c"},
                                 {"c", "c"}});

  // Cycles are legal in a preorder and fatal in a poset.
  const FinitePreorder cyc({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(cyc.leqByLabel("b", "a"));
  CHECK_THROWS_WITH_AS(FinitePoset({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                       "antisymmetry violated between 'a' and 'b'",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(FinitePreorder({"a", "a"}, {}),
                       "duplicate element label 'a'", std::invalid_argument);
  CHECK_THROWS_WITH_AS(FinitePreorder({"a"}, {{"a", "z"}}),
                       "relation names unknown element 'z'",
                       std::invalid_argument);
}

TEST_CASE("inclusion poset over copy families") {
  const auto family = homogkit::copies(homogkit::fixture("Kn", {2}),
                                       homogkit::fixture("Kn", {3}));
  const auto p = homogkit::inclusionPoset(family);
  CHECK(p.size() == 3);
  CHECK(p.elements() ==
        std::vector<std::string>{"{0,1}", "{0,2}", "{1,2}"});
  CHECK_FALSE(p.leqByLabel("{0,1}", "{0,2}"));
  CHECK(p.leqByLabel("{0,1}", "{0,1}"));

  const auto nested = homogkit::inclusionPoset({{0}, {0, 1}, {2}, {0, 1}});
  CHECK(nested.size() == 3);  // duplicate collapses
  CHECK(nested.leqByLabel("{0}", "{0,1}"));
  CHECK_FALSE(nested.leqByLabel("{2}", "{0,1}"));

  CHECK_THROWS_WITH_AS(homogkit::inclusionPoset({}),
                       "inclusionPoset: family must be nonempty",
                       std::invalid_argument);
}

TEST_CASE("atoms and atomicity") {
  const auto b3 = booleanThree();
  CHECK(homogkit::atoms(b3) ==
        std::vector<std::string>{"{0}", "{1}", "{2}"});
  CHECK(homogkit::isAtomic(b3));
  CHECK_FALSE(homogkit::isAtomless(b3));

  // In a chain everything is an atom: all lower sets are linearly ordered,
  // hence pairwise compatible.
  CHECK(homogkit::atoms(chain(3)) ==
        std::vector<std::string>{"c0", "c1", "c2"});

  const auto v = vee();
  CHECK(homogkit::atoms(v) == std::vector<std::string>{"a", "b", "c"});

  // One top over two incomparable bottoms: the top is not an atom.
  const FinitePoset lambda({"t", "x", "y"}, {{"x", "t"}, {"y", "t"}});
  CHECK(homogkit::atoms(lambda) == std::vector<std::string>{"x", "y"});
  CHECK(homogkit::isAtomic(lambda));

  // Every nonempty finite poset has a minimal element, which is an atom.
  homogkit::SplitMix64 rng{0xa70ULL};
  for (int iter = 0; iter < 40; ++iter) {
    const auto p = randomPoset(rng, 1 + static_cast<int>(rng.below(6)));
    CHECK_FALSE(homogkit::isAtomless(p));
  }
  CHECK(homogkit::isAtomless(FinitePoset({}, {})));

  // The preorder overloads see through equivalence classes.
  const FinitePreorder cyc({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(homogkit::atoms(cyc) == std::vector<std::string>{"a", "b"});
  CHECK(homogkit::isAtomic(cyc));
}

TEST_CASE("separativity of the basic shapes") {
  CHECK(homogkit::isSeparative(booleanThree()));
  CHECK(homogkit::isSeparative(antichain(3)));
  CHECK(homogkit::isSeparative(antichain(1)));
  CHECK_FALSE(homogkit::isSeparative(chain(2)));
  CHECK_FALSE(homogkit::isSeparative(vee()));
  const FinitePoset lambda({"t", "x", "y"}, {{"x", "t"}, {"y", "t"}});
  CHECK(homogkit::isSeparative(lambda));
}

TEST_CASE("separative modification of a two-chain collapses it") {
  const auto two = chain(2);
  const auto sm = homogkit::separativeModification(two);
  CHECK(sm.leqByLabel("c0", "c1"));
  CHECK(sm.leqByLabel("c1", "c0"));  // mutual, a preorder not a poset

  const auto smAnti = homogkit::separativeModification(antichain(2));
  CHECK(smAnti.relationPairs() == Rel{{"e0", "e0"}, {"e1", "e1"}});

  // The modification contains the original order.
  homogkit::SplitMix64 rng{0x4042ULL};
  for (int iter = 0; iter < 40; ++iter) {
    const auto p = randomPoset(rng, 1 + static_cast<int>(rng.below(6)));
    const auto star = homogkit::separativeModification(p);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.leq(a, b)) CHECK(star.leq(a, b));
  }
}

TEST_CASE("separative quotient") {
  // Chains collapse to a point, labelled by the earliest member.
  for (int len = 1; len <= 6; ++len) {
    const auto q = homogkit::separativeQuotient(chain(len));
    CHECK(q.size() == 1);
    CHECK(q.elements() == std::vector<std::string>{"c0"});
  }
  CHECK(homogkit::separativeQuotient(vee()).size() == 1);

  const auto qAnti = homogkit::separativeQuotient(antichain(3));
  CHECK(qAnti.size() == 3);

  homogkit::SplitMix64 rng{0x4043ULL};
  for (int iter = 0; iter < 50; ++iter) {
    const auto p = randomPoset(rng, 1 + static_cast<int>(rng.below(6)));
    const auto q = homogkit::separativeQuotient(p);
    // Always separative, hence idempotent up to isomorphism.
    CHECK(homogkit::isSeparative(q));
    CHECK(homogkit::posetIsomorphic(homogkit::separativeQuotient(q), q).has_value());
    if (homogkit::isSeparative(p))
      CHECK(homogkit::posetIsomorphic(q, p).has_value());
  }

  // A separative poset is its own quotient.
  const auto b3 = booleanThree();
  const auto qb3 = homogkit::separativeQuotient(b3);
  REQUIRE(qb3.size() == b3.size());
  CHECK(homogkit::posetIsomorphic(qb3, b3).has_value());
}

TEST_CASE("products") {
  const auto diamond = homogkit::product({chain(2), chain(2)});
  CHECK(diamond.size() == 4);
  CHECK(diamond.elements() ==
        std::vector<std::string>{"(c0,c0)", "(c0,c1)", "(c1,c0)", "(c1,c1)"});
  CHECK(diamond.leqByLabel("(c0,c0)", "(c1,c1)"));
  CHECK_FALSE(diamond.leqByLabel("(c0,c1)", "(c1,c0)"));

  const auto p = homogkit::product({antichain(2), chain(3)});
  CHECK(p.size() == 6);
  const auto q = homogkit::product({chain(3), antichain(2)});
  CHECK(homogkit::posetIsomorphic(p, q).has_value());

  CHECK_THROWS_WITH_AS(homogkit::product(std::vector<FinitePoset>{}),
                       "product: factor list must be nonempty",
                       std::invalid_argument);

  const FinitePreorder cyc({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  const auto pre = homogkit::product({cyc, cyc});
  CHECK(pre.size() == 4);
  CHECK(pre.leqByLabel("(a,a)", "(b,b)"));
  CHECK(pre.leqByLabel("(b,b)", "(a,a)"));
}

TEST_CASE("poset isomorphism") {
  CHECK_FALSE(homogkit::posetIsomorphic(chain(2), antichain(2)).has_value());
  CHECK_FALSE(homogkit::posetIsomorphic(chain(2), chain(3)).has_value());
  CHECK_FALSE(
      homogkit::posetIsomorphic(homogkit::product({chain(2), chain(2)}), chain(4))
          .has_value());

  const auto iso = homogkit::posetIsomorphic(antichain(2), antichain(2));
  REQUIRE(iso.has_value());
  CHECK(*iso == std::vector<std::size_t>{0, 1});  // lexicographically least

  homogkit::SplitMix64 rng{0x150ULL};
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const auto p = randomPoset(rng, n);
    // Relabel through a random permutation of the element order.
    std::vector<std::size_t> perm(p.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<std::string> elements(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      elements[perm[i]] = p.elements()[i];
    Rel rel;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.leq(a, b))
          rel.emplace_back(p.elements()[a], p.elements()[b]);
    const FinitePoset q(elements, rel);
    const auto found = homogkit::posetIsomorphic(p, q);
    REQUIRE(found.has_value());
    CHECK(validIso(p, q, *found));
  }
}
