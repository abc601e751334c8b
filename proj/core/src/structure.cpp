#include "homogkit/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace homogkit {

namespace {

std::size_t wordCount(int n) {
  std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  return (cells + 63) / 64;
}

std::string pairText(int x, int y) {
  return "[" + std::to_string(x) + "," + std::to_string(y) + "]";
}

}  // namespace

BinaryStructure::BinaryStructure(int size) : n_(size), words_(wordCount(size), 0) {
  if (size < 0) throw std::invalid_argument("structure size must be nonnegative");
}

BinaryStructure::BinaryStructure(int size,
                                 std::initializer_list<std::pair<int, int>> pairs)
    : BinaryStructure(size) {
  for (const auto& [x, y] : pairs) {
    if (x < 0 || x >= n_ || y < 0 || y >= n_)
      throw std::invalid_argument("pair " + pairText(x, y) + " out of range for n=" +
                                  std::to_string(n_));
    set(x, y);
  }
}

BinaryStructure BinaryStructure::fromPairs(
    int size, const std::vector<std::pair<int, int>>& pairs) {
  BinaryStructure s(size);
  for (const auto& [x, y] : pairs) {
    if (x < 0 || x >= size || y < 0 || y >= size)
      throw std::invalid_argument("pair " + pairText(x, y) + " out of range for n=" +
                                  std::to_string(size));
    s.set(x, y);
  }
  return s;
}

int BinaryStructure::pairCount() const {
  int total = 0;
  for (std::uint64_t w : words_) total += __builtin_popcountll(w);
  return total;
}

std::vector<std::pair<int, int>> BinaryStructure::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (has(x, y)) out.emplace_back(x, y);
  return out;
}

BinaryStructure BinaryStructure::induced(const std::vector<int>& vertices) const {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= n_)
      throw std::invalid_argument("induced: vertex " + std::to_string(sorted[i]) +
                                  " out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("induced: duplicate vertex " +
                                  std::to_string(sorted[i]));
  }
  BinaryStructure s(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < sorted.size(); ++j)
      if (has(sorted[i], sorted[j])) s.set(static_cast<int>(i), static_cast<int>(j));
  return s;
}

BinaryStructure complement(const BinaryStructure& x) {
  BinaryStructure s(x.n_);
  for (int a = 0; a < x.n_; ++a)
    for (int b = 0; b < x.n_; ++b)
      if (!x.has(a, b)) s.set(a, b);
  return s;
}

BinaryStructure inverse(const BinaryStructure& x) {
  BinaryStructure s(x.n_);
  for (int a = 0; a < x.n_; ++a)
    for (int b = 0; b < x.n_; ++b)
      if (x.has(a, b)) s.set(b, a);
  return s;
}

BinaryStructure reflexify(const BinaryStructure& x) {
  BinaryStructure s = x;
  for (int a = 0; a < x.n_; ++a) s.set(a, a);
  return s;
}

BinaryStructure irreflexify(const BinaryStructure& x) {
  BinaryStructure s(x.n_);
  for (int a = 0; a < x.n_; ++a)
    for (int b = 0; b < x.n_; ++b)
      if (a != b && x.has(a, b)) s.set(a, b);
  return s;
}

BinaryStructure enlarge(const BinaryStructure& x) {
  BinaryStructure s = x;
  for (int a = 0; a < x.n_; ++a)
    for (int b = 0; b < x.n_; ++b)
      if (a != b && !x.has(a, b) && !x.has(b, a)) s.set(a, b);
  return s;
}

BinaryStructure rsRelation(const BinaryStructure& x) {
  BinaryStructure s = x;
  for (int a = 0; a < x.n_; ++a) {
    s.set(a, a);
    for (int b = 0; b < x.n_; ++b)
      if (x.has(a, b)) s.set(b, a);
  }
  return s;
}

BinaryStructure disjointUnion(const std::vector<BinaryStructure>& parts) {
  if (parts.empty())
    throw std::invalid_argument("disjointUnion: empty part sequence");
  int total = 0;
  for (const auto& p : parts) total += p.size();
  BinaryStructure s(total);
  int offset = 0;
  for (const auto& p : parts) {
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b)
        if (p.has(a, b)) s.set(offset + a, offset + b);
    offset += p.size();
  }
  return s;
}

ComponentPartition components(const BinaryStructure& x) {
  const int n = x.size();
  ComponentPartition part;
  part.blockOf.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (part.blockOf[start] != -1) continue;
    const int id = static_cast<int>(part.blocks.size());
    std::vector<int> queue{start};
    part.blockOf[start] = id;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int v = queue[q];
      for (int w = 0; w < n; ++w) {
        if (part.blockOf[w] != -1) continue;
        if (x.has(v, w) || x.has(w, v)) {
          part.blockOf[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    part.blocks.push_back(std::move(queue));
  }
  return part;
}

bool isConnected(const BinaryStructure& x) {
  return components(x).blocks.size() == 1;
}

Predicates predicates(const BinaryStructure& x) {
  const int n = x.size();
  Predicates p;
  p.reflexive = true;
  p.irreflexive = true;
  bool symmetric = true;
  bool asymmetric = true;
  p.complete = true;
  for (int a = 0; a < n; ++a) {
    if (x.has(a, a))
      p.irreflexive = false;
    else
      p.reflexive = false;
    for (int b = 0; b < n; ++b) {
      if (x.has(a, b) != x.has(b, a)) symmetric = false;
      if (x.has(a, b) && x.has(b, a)) asymmetric = false;
      if (a != b && !x.has(a, b) && !x.has(b, a)) p.complete = false;
    }
  }
  p.graph = p.irreflexive && symmetric;
  p.digraph = p.irreflexive && asymmetric;
  p.tournament = p.digraph && p.complete;
  p.connected = isConnected(x);
  p.biconnected = p.connected && isConnected(complement(x));
  return p;
}

namespace {

struct VertexSignature {
  bool loop = false;
  int out = 0;
  int in = 0;
  bool operator==(const VertexSignature&) const = default;
};

std::vector<VertexSignature> signatures(const BinaryStructure& x) {
  std::vector<VertexSignature> sig(x.size());
  for (int a = 0; a < x.size(); ++a) {
    sig[a].loop = x.has(a, a);
    for (int b = 0; b < x.size(); ++b) {
      if (x.has(a, b)) ++sig[a].out;
      if (x.has(b, a)) ++sig[a].in;
    }
  }
  return sig;
}

bool consistentWithPrefix(const BinaryStructure& x, const BinaryStructure& y,
                          const std::vector<int>& img, int v, int target) {
  if (x.has(v, v) != y.has(target, target)) return false;
  for (int u = 0; u < v; ++u) {
    if (x.has(u, v) != y.has(img[u], target)) return false;
    if (x.has(v, u) != y.has(target, img[u])) return false;
  }
  return true;
}

bool searchIsomorphism(const BinaryStructure& x, const BinaryStructure& y,
                       const std::vector<VertexSignature>& sx,
                       const std::vector<VertexSignature>& sy,
                       std::vector<int>& img, std::vector<bool>& used, int v) {
  const int n = x.size();
  if (v == n) return true;
  // Trying targets in ascending order makes the first full assignment the
  // lexicographically least one.
  for (int t = 0; t < n; ++t) {
    if (used[t] || !(sx[v] == sy[t])) continue;
    if (!consistentWithPrefix(x, y, img, v, t)) continue;
    img[v] = t;
    used[t] = true;
    if (searchIsomorphism(x, y, sx, sy, img, used, v + 1)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const BinaryStructure& x,
                                            const BinaryStructure& y) {
  if (x.size() != y.size()) return std::nullopt;
  if (x.pairCount() != y.pairCount()) return std::nullopt;
  auto sx = signatures(x);
  auto sy = signatures(y);
  auto keyless = [](const VertexSignature& a, const VertexSignature& b) {
    return std::tie(a.loop, a.out, a.in) < std::tie(b.loop, b.out, b.in);
  };
  auto mx = sx;
  auto my = sy;
  std::sort(mx.begin(), mx.end(), keyless);
  std::sort(my.begin(), my.end(), keyless);
  if (mx != my) return std::nullopt;
  std::vector<int> img(x.size(), -1);
  std::vector<bool> used(x.size(), false);
  if (searchIsomorphism(x, y, sx, sy, img, used, 0)) return img;
  return std::nullopt;
}

bool isomorphic(const BinaryStructure& x, const BinaryStructure& y) {
  return isomorphism(x, y).has_value();
}

}  // namespace homogkit
