#include "homogkit/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace homogkit {

namespace {

std::vector<std::vector<bool>> closeRelation(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& relation) {
  const std::size_t n = labels.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second)
      throw std::invalid_argument("duplicate element label '" + labels[i] + "'");
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : relation) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end())
      throw std::invalid_argument("relation names unknown element '" + a + "'");
    if (ib == index.end())
      throw std::invalid_argument("relation names unknown element '" + b + "'");
    leq[ia->second][ib->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

}  // namespace

FinitePreorder::FinitePreorder(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relation)
    : labels_(std::move(elements)), leq_(closeRelation(labels_, relation)) {}

std::size_t FinitePreorder::indexOf(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown element '" + label + "'");
}

bool FinitePreorder::leqByLabel(const std::string& a, const std::string& b) const {
  return leq(indexOf(a), indexOf(b));
}

std::vector<std::pair<std::string, std::string>> FinitePreorder::relationPairs()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (leq_[i][j]) out.emplace_back(labels_[i], labels_[j]);
  std::sort(out.begin(), out.end());
  return out;
}

FinitePoset::FinitePoset(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relation) {
  pre_ = FinitePreorder(std::move(elements), relation);
  for (std::size_t i = 0; i < pre_.size(); ++i)
    for (std::size_t j = i + 1; j < pre_.size(); ++j)
      if (pre_.leq(i, j) && pre_.leq(j, i))
        throw std::invalid_argument("antisymmetry violated between '" +
                                    pre_.elements()[i] + "' and '" +
                                    pre_.elements()[j] + "'");
}

FinitePoset inclusionPoset(const CopySet& family) {
  if (family.empty())
    throw std::invalid_argument("inclusionPoset: family must be nonempty");
  std::set<std::vector<int>> dedup(family.begin(), family.end());
  auto render = [](const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    return out + "}";
  };
  std::vector<std::string> labels;
  std::vector<const std::vector<int>*> sets;
  for (const auto& s : dedup) {
    labels.push_back(render(s));
    sets.push_back(&s);
  }
  std::vector<std::pair<std::string, std::string>> relation;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (std::includes(sets[j]->begin(), sets[j]->end(), sets[i]->begin(),
                        sets[i]->end()))
        relation.emplace_back(labels[i], labels[j]);
  return FinitePoset(std::move(labels), relation);
}

namespace {

// Shared definitional kernel; both order classes expose a leq matrix view.
struct OrderView {
  std::size_t n;
  const FinitePreorder* pre;
  bool leq(std::size_t a, std::size_t b) const { return pre->leq(a, b); }
};

OrderView view(const FinitePreorder& p) { return {p.size(), &p}; }
OrderView view(const FinitePoset& p) { return {p.size(), &p.order()}; }

bool compatibleIn(const OrderView& v, std::size_t q, std::size_t r) {
  for (std::size_t s = 0; s < v.n; ++s)
    if (v.leq(s, q) && v.leq(s, r)) return true;
  return false;
}

bool isAtomIn(const OrderView& v, std::size_t p) {
  for (std::size_t q = 0; q < v.n; ++q) {
    if (!v.leq(q, p)) continue;
    for (std::size_t r = 0; r < v.n; ++r)
      if (v.leq(r, p) && !compatibleIn(v, q, r)) return false;
  }
  return true;
}

std::vector<std::string> atomsIn(const OrderView& v,
                                 const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < v.n; ++p)
    if (isAtomIn(v, p)) out.push_back(labels[p]);
  return out;
}

bool isAtomicIn(const OrderView& v) {
  for (std::size_t p = 0; p < v.n; ++p) {
    bool found = false;
    for (std::size_t a = 0; a < v.n && !found; ++a)
      found = v.leq(a, p) && isAtomIn(v, a);
    if (!found) return false;
  }
  return true;
}

bool hasAtomIn(const OrderView& v) {
  for (std::size_t p = 0; p < v.n; ++p)
    if (isAtomIn(v, p)) return true;
  return false;
}

}  // namespace

std::vector<std::string> atoms(const FinitePreorder& p) {
  return atomsIn(view(p), p.elements());
}
std::vector<std::string> atoms(const FinitePoset& p) {
  return atomsIn(view(p), p.elements());
}

bool isAtomless(const FinitePreorder& p) { return !hasAtomIn(view(p)); }
bool isAtomless(const FinitePoset& p) { return !hasAtomIn(view(p)); }

bool isAtomic(const FinitePreorder& p) { return isAtomicIn(view(p)); }
bool isAtomic(const FinitePoset& p) { return isAtomicIn(view(p)); }

bool isSeparative(const FinitePoset& p) {
  const auto v = view(p);
  for (std::size_t a = 0; a < v.n; ++a)
    for (std::size_t b = 0; b < v.n; ++b) {
      if (v.leq(a, b)) continue;
      bool witness = false;
      for (std::size_t r = 0; r < v.n && !witness; ++r)
        witness = v.leq(r, a) && !compatibleIn(v, r, b);
      if (!witness) return false;
    }
  return true;
}

FinitePreorder separativeModification(const FinitePoset& p) {
  const auto v = view(p);
  std::vector<std::pair<std::string, std::string>> relation;
  for (std::size_t a = 0; a < v.n; ++a)
    for (std::size_t b = 0; b < v.n; ++b) {
      bool star = true;
      for (std::size_t r = 0; r < v.n && star; ++r) {
        if (!v.leq(r, a)) continue;
        bool found = false;
        for (std::size_t s = 0; s < v.n && !found; ++s)
          found = v.leq(s, r) && v.leq(s, b);
        star = found;
      }
      if (star) relation.emplace_back(p.elements()[a], p.elements()[b]);
    }
  return FinitePreorder(p.elements(), relation);
}

FinitePoset separativeQuotient(const FinitePoset& p) {
  const FinitePreorder star = separativeModification(p);
  const std::size_t n = star.size();
  std::vector<std::size_t> representative(n);
  for (std::size_t i = 0; i < n; ++i) {
    representative[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (star.leq(i, j) && star.leq(j, i)) {
        representative[i] = representative[j];
        break;
      }
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i)
    if (representative[i] == i) {
      labels.push_back(star.elements()[i]);
      reps.push_back(i);
    }
  std::vector<std::pair<std::string, std::string>> relation;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (star.leq(reps[a], reps[b])) relation.emplace_back(labels[a], labels[b]);
  return FinitePoset(std::move(labels), relation);
}

namespace {

template <typename Order>
Order productOf(const std::vector<Order>& factors) {
  if (factors.empty())
    throw std::invalid_argument("product: factor list must be nonempty");
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (std::size_t i = 0; i < f.size(); ++i) {
        auto u = t;
        u.push_back(i);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  auto label = [&](const std::vector<std::size_t>& t) {
    std::string out = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) out += ",";
      out += factors[k].elements()[t[k]];
    }
    return out + ")";
  };
  std::vector<std::string> labels;
  labels.reserve(tuples.size());
  for (const auto& t : tuples) labels.push_back(label(t));
  std::vector<std::pair<std::string, std::string>> relation;
  for (std::size_t a = 0; a < tuples.size(); ++a)
    for (std::size_t b = 0; b < tuples.size(); ++b) {
      bool le = true;
      for (std::size_t k = 0; k < factors.size() && le; ++k)
        le = factors[k].leq(tuples[a][k], tuples[b][k]);
      if (le) relation.emplace_back(labels[a], labels[b]);
    }
  return Order(std::move(labels), relation);
}

}  // namespace

FinitePoset product(const std::vector<FinitePoset>& factors) {
  return productOf(factors);
}

FinitePreorder product(const std::vector<FinitePreorder>& factors) {
  return productOf(factors);
}

namespace {

struct PosetSignature {
  std::size_t down = 0;
  std::size_t up = 0;
  bool operator==(const PosetSignature&) const = default;
  auto operator<=>(const PosetSignature&) const = default;
};

std::vector<PosetSignature> posetSignatures(const FinitePoset& p) {
  std::vector<PosetSignature> sig(p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(b, a)) ++sig[a].down;
      if (p.leq(a, b)) ++sig[a].up;
    }
  return sig;
}

bool searchPosetIso(const FinitePoset& p, const FinitePoset& q,
                    const std::vector<PosetSignature>& sp,
                    const std::vector<PosetSignature>& sq,
                    std::vector<std::size_t>& img, std::vector<bool>& used,
                    std::size_t a) {
  if (a == p.size()) return true;
  for (std::size_t t = 0; t < q.size(); ++t) {
    if (used[t] || sp[a] != sq[t]) continue;
    bool ok = true;
    for (std::size_t b = 0; b < a && ok; ++b)
      ok = p.leq(a, b) == q.leq(t, img[b]) && p.leq(b, a) == q.leq(img[b], t);
    if (!ok) continue;
    img[a] = t;
    used[t] = true;
    if (searchPosetIso(p, q, sp, sq, img, used, a + 1)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> posetIsomorphic(const FinitePoset& p,
                                                        const FinitePoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  auto sp = posetSignatures(p);
  auto sq = posetSignatures(q);
  auto mp = sp;
  auto mq = sq;
  std::sort(mp.begin(), mp.end());
  std::sort(mq.begin(), mq.end());
  if (mp != mq) return std::nullopt;
  std::vector<std::size_t> img(p.size(), 0);
  std::vector<bool> used(p.size(), false);
  if (searchPosetIso(p, q, sp, sq, img, used, 0)) return img;
  return std::nullopt;
}

}  // namespace homogkit
