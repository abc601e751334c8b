#ifndef HOMOGKIT_FIXTURES_HPP
#define HOMOGKIT_FIXTURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homogkit/structure.hpp"

namespace homogkit {

// Named example structures:
//   An [n]    no pairs at all
//   Kn [n]    complete graph
//   mKn [m,n] m >= 1 disjoint copies of Kn
//   C3 []     the 3-cycle tournament
//   Cn [n]    cycle graph, n >= 3
//   Ln [n]    strict linear order
//   Pn [n]    path graph
//   Kmn [m,n] complete bipartite graph
// Unknown names and out-of-range parameters throw std::invalid_argument.
BinaryStructure fixture(const std::string& name, const std::vector<int>& params);

std::vector<std::string> fixtureNames();

// splitmix64; the exact constants matter for reproducibility of seeds
// recorded in reports.
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform over [0, bound) by rejection on the low bits.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t mask = 1;
    while (mask < bound) mask = (mask << 1) | 1;
    for (;;) {
      const std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }
  bool coin() { return next() & 1; }
};

enum class RandomClass { Any, Irreflexive, Digraph, Graph };

std::optional<RandomClass> randomClassFromName(const std::string& name);
std::string randomClassName(RandomClass c);

// Uniform over the chosen class of relations on n vertices, deterministic
// for fixed (n, seed, class): a SplitMix64 stream starts at state = seed and
// is consumed in row-major cell order (one draw per cell, or per unordered
// pair for graph/digraph).
BinaryStructure randomStructure(int n, std::uint64_t seed, RandomClass cls);

}  // namespace homogkit

#endif
