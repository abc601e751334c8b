#include "homogkit/embedding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace homogkit {

PartialMap::PartialMap(std::vector<std::pair<int, int>> assignments)
    : pairs_(std::move(assignments)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 1; i < pairs_.size(); ++i)
    if (pairs_[i].first == pairs_[i - 1].first)
      throw std::invalid_argument("PartialMap: duplicate source vertex " +
                                  std::to_string(pairs_[i].first));
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    for (std::size_t j = i + 1; j < pairs_.size(); ++j)
      if (pairs_[i].second == pairs_[j].second)
        throw std::invalid_argument("PartialMap: duplicate target vertex " +
                                    std::to_string(pairs_[i].second));
}

std::optional<int> PartialMap::image(int source) const {
  for (const auto& [s, t] : pairs_)
    if (s == source) return t;
  return std::nullopt;
}

bool PartialMap::hasTarget(int target) const {
  for (const auto& [s, t] : pairs_)
    if (t == target) return true;
  return false;
}

PartialMap PartialMap::extended(int source, int target) const {
  PartialMap out = *this;
  auto pos = std::lower_bound(out.pairs_.begin(), out.pairs_.end(),
                              std::pair<int, int>{source, target});
  out.pairs_.insert(pos, {source, target});
  return out;
}

bool PartialMap::operator<(const PartialMap& other) const {
  if (pairs_.size() != other.pairs_.size())
    return pairs_.size() < other.pairs_.size();
  return pairs_ < other.pairs_;
}

bool isPartialIsomorphismBetween(const BinaryStructure& x,
                                 const BinaryStructure& y, const PartialMap& f) {
  const auto& ps = f.assignments();
  for (const auto& [a, fa] : ps)
    for (const auto& [b, fb] : ps) {
      if (x.has(a, b) != y.has(fa, fb)) return false;
    }
  return true;
}

namespace {

struct Signature {
  bool loop = false;
  int out = 0;
  int in = 0;
};

std::vector<Signature> signatures(const BinaryStructure& x) {
  std::vector<Signature> sig(x.size());
  for (int a = 0; a < x.size(); ++a) {
    sig[a].loop = x.has(a, a);
    for (int b = 0; b < x.size(); ++b) {
      if (x.has(a, b)) ++sig[a].out;
      if (x.has(b, a)) ++sig[a].in;
    }
  }
  return sig;
}

// A target can host a source vertex only if its loop matches and its degrees
// dominate; vertices outside the image may supply the surplus.
bool dominates(const Signature& target, const Signature& source) {
  return target.loop == source.loop && target.out >= source.out &&
         target.in >= source.in;
}

struct EmbeddingSearch {
  const BinaryStructure& x;
  const BinaryStructure& y;
  std::vector<int> order;
  std::vector<int> img;
  std::vector<bool> used;
  std::vector<std::vector<int>> results;

  EmbeddingSearch(const BinaryStructure& xx, const BinaryStructure& yy)
      : x(xx), y(yy), img(xx.size(), -1), used(yy.size(), false) {
    auto sig = signatures(x);
    order.resize(x.size());
    for (int v = 0; v < x.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (sig[a].out != sig[b].out) return sig[a].out > sig[b].out;
      return sig[a].in > sig[b].in;
    });
  }

  bool consistent(int v, int t, std::size_t depth) const {
    if (x.has(v, v) != y.has(t, t)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const int u = order[i];
      if (x.has(u, v) != y.has(img[u], t)) return false;
      if (x.has(v, u) != y.has(t, img[u])) return false;
    }
    return true;
  }

  void run(std::size_t depth, const std::vector<Signature>& sx,
           const std::vector<Signature>& sy) {
    if (depth == order.size()) {
      results.push_back(img);
      return;
    }
    const int v = order[depth];
    for (int t = 0; t < y.size(); ++t) {
      if (used[t] || !dominates(sy[t], sx[v])) continue;
      if (!consistent(v, t, depth)) continue;
      img[v] = t;
      used[t] = true;
      run(depth + 1, sx, sy);
      used[t] = false;
      img[v] = -1;
    }
  }
};

}  // namespace

std::vector<PartialMap> embeddings(const BinaryStructure& x,
                                   const BinaryStructure& y) {
  if (x.size() > y.size()) return {};
  EmbeddingSearch search(x, y);
  auto sx = signatures(x);
  auto sy = signatures(y);
  search.run(0, sx, sy);
  std::vector<PartialMap> out;
  out.reserve(search.results.size());
  for (const auto& img : search.results) {
    std::vector<std::pair<int, int>> assignments;
    assignments.reserve(img.size());
    for (int v = 0; v < x.size(); ++v) assignments.emplace_back(v, img[v]);
    out.emplace_back(std::move(assignments));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialMap> automorphisms(const BinaryStructure& x) {
  return embeddings(x, x);
}

CopySet copies(const BinaryStructure& x, const BinaryStructure& y) {
  std::set<std::vector<int>> images;
  for (const auto& f : embeddings(x, y)) {
    std::vector<int> img;
    img.reserve(f.size());
    for (const auto& [s, t] : f.assignments()) img.push_back(t);
    std::sort(img.begin(), img.end());
    images.insert(std::move(img));
  }
  return CopySet(images.begin(), images.end());
}

namespace {

// Valid one-point extensions of f by the source vertex v.
std::vector<int> extensionTargets(const BinaryStructure& x, const PartialMap& f,
                                  int v) {
  std::vector<int> targets;
  for (int t = 0; t < x.size(); ++t) {
    if (f.hasTarget(t)) continue;
    if (x.has(v, v) != x.has(t, t)) continue;
    bool ok = true;
    for (const auto& [a, fa] : f.assignments()) {
      if (x.has(a, v) != x.has(fa, t) || x.has(v, a) != x.has(t, fa)) {
        ok = false;
        break;
      }
    }
    if (ok) targets.push_back(t);
  }
  return targets;
}

}  // namespace

std::vector<PartialMap> partialIsomorphisms(const BinaryStructure& x,
                                            int maxSize) {
  if (maxSize < 0 || maxSize > x.size())
    throw std::invalid_argument("partialIsomorphisms: maxSize " +
                                std::to_string(maxSize) + " out of range for n=" +
                                std::to_string(x.size()));
  std::vector<PartialMap> out{PartialMap{}};
  std::set<PartialMap> level{PartialMap{}};
  for (int k = 0; k < maxSize; ++k) {
    std::set<PartialMap> next;
    for (const auto& f : level)
      for (int v = 0; v < x.size(); ++v) {
        if (f.image(v)) continue;
        for (int t : extensionTargets(x, f, v)) next.insert(f.extended(v, t));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

UhVerdict isUltrahomogeneous(const BinaryStructure& x) {
  const int n = x.size();
  std::set<PartialMap> level{PartialMap{}};
  for (int k = 0; k < n; ++k) {
    std::set<PartialMap> next;
    for (const auto& f : level) {
      for (int v = 0; v < n; ++v) {
        if (f.image(v)) continue;
        auto targets = extensionTargets(x, f, v);
        if (targets.empty()) return {false, f};
        for (int t : targets) next.insert(f.extended(v, t));
      }
    }
    level = std::move(next);
  }
  return {true, std::nullopt};
}

namespace {

bool blocksUnlinked(const BinaryStructure& y, const std::vector<int>& a,
                    const std::vector<int>& b) {
  for (int p : a)
    for (int q : b) {
      if (p == q) return false;  // shared vertex is a diagonal link
      if (y.has(p, q) || y.has(q, p)) return false;
    }
  return true;
}

void chooseComponentImages(const BinaryStructure& y,
                           const std::vector<CopySet>& perComponent,
                           std::size_t idx, std::vector<const std::vector<int>*>& chosen,
                           std::set<std::vector<int>>& unions) {
  if (idx == perComponent.size()) {
    std::vector<int> u;
    for (const auto* img : chosen) u.insert(u.end(), img->begin(), img->end());
    std::sort(u.begin(), u.end());
    unions.insert(std::move(u));
    return;
  }
  for (const auto& img : perComponent[idx]) {
    bool ok = true;
    for (const auto* prev : chosen)
      if (!blocksUnlinked(y, *prev, img)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(&img);
    chooseComponentImages(y, perComponent, idx + 1, chosen, unions);
    chosen.pop_back();
  }
}

}  // namespace

CopySet copiesViaComponents(const BinaryStructure& x, const BinaryStructure& y) {
  const auto part = components(x);
  std::vector<CopySet> perComponent;
  perComponent.reserve(part.blocks.size());
  for (const auto& block : part.blocks)
    perComponent.push_back(copies(x.induced(block), y));
  std::set<std::vector<int>> unions;
  std::vector<const std::vector<int>*> chosen;
  chooseComponentImages(y, perComponent, 0, chosen, unions);
  return CopySet(unions.begin(), unions.end());
}

bool stronglyConnected(const BinaryStructure& x) {
  if (!isConnected(x)) return false;
  const auto family = copies(x, x);
  const auto rs = rsRelation(x);
  for (const auto& a : family)
    for (const auto& b : family) {
      bool linked = false;
      for (int p : a) {
        for (int q : b)
          if (rs.has(p, q)) {
            linked = true;
            break;
          }
        if (linked) break;
      }
      if (!linked) return false;
    }
  return true;
}

}  // namespace homogkit
