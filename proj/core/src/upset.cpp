#include "homogkit/upset.hpp"

#include <algorithm>
#include <numeric>

namespace homogkit {

namespace {

void sortUnique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool member(const std::vector<std::uint64_t>& sorted, std::uint64_t k) {
  return std::binary_search(sorted.begin(), sorted.end(), k);
}

}  // namespace

UPSet::UPSet() = default;

UPSet::UPSet(std::uint64_t threshold, std::vector<std::uint64_t> prefix,
             std::uint64_t period, std::vector<std::uint64_t> residues)
    : threshold_(threshold),
      prefix_(std::move(prefix)),
      period_(period),
      residues_(std::move(residues)) {
  if (period_ == 0) throw std::invalid_argument("UPSet: period must be positive");
  if (period_ > kLimit || threshold_ > kLimit)
    throw std::length_error("UPSet: period or threshold exceeds limit");
  sortUnique(prefix_);
  sortUnique(residues_);
  if (!prefix_.empty() && prefix_.back() >= threshold_)
    throw std::invalid_argument("UPSet: prefix element " +
                                std::to_string(prefix_.back()) +
                                " not below threshold");
  if (!residues_.empty() && residues_.back() >= period_)
    throw std::invalid_argument("UPSet: residue " +
                                std::to_string(residues_.back()) +
                                " not below period");
  canonicalize();
}

UPSet UPSet::finiteSet(std::vector<std::uint64_t> elements) {
  sortUnique(elements);
  const std::uint64_t t = elements.empty() ? 0 : elements.back() + 1;
  return UPSet(t, std::move(elements), 1, {});
}

UPSet UPSet::mod(std::uint64_t period, std::vector<std::uint64_t> residues) {
  return UPSet(0, {}, period, std::move(residues));
}

UPSet UPSet::omega() { return UPSet(0, {}, 1, {0}); }

bool UPSet::contains(std::uint64_t k) const {
  if (k < threshold_) return member(prefix_, k);
  return member(residues_, k % period_);
}

void UPSet::canonicalize() {
  // Least eventual period: strip one prime factor at a time while the
  // residue pattern stays invariant under the shorter shift.
  bool reduced = true;
  while (reduced && period_ > 1) {
    reduced = false;
    std::uint64_t p = period_;
    for (std::uint64_t q = 2; q * q <= p; ++q) {
      while (p % q == 0) {
        const std::uint64_t d = period_ / q;
        bool invariant = period_ % q == 0;
        for (std::uint64_t r = 0; invariant && r < period_; ++r)
          invariant = member(residues_, r) == member(residues_, r % d);
        if (invariant) {
          std::vector<std::uint64_t> cut;
          for (std::uint64_t r : residues_)
            if (r < d) cut.push_back(r);
          residues_ = std::move(cut);
          period_ = d;
          reduced = true;
          break;
        }
        p /= q;
      }
      if (reduced) break;
    }
    if (!reduced && p > 1) {  // p itself is prime
      const std::uint64_t d = period_ / p;
      bool invariant = true;
      for (std::uint64_t r = 0; invariant && r < period_; ++r)
        invariant = member(residues_, r) == member(residues_, r % d);
      if (invariant) {
        std::vector<std::uint64_t> cut;
        for (std::uint64_t r : residues_)
          if (r < d) cut.push_back(r);
        residues_ = std::move(cut);
        period_ = d;
        reduced = true;
      }
    }
  }
  // Least threshold: positions just below the cut that already follow the
  // periodic pattern move out of the prefix.
  while (threshold_ > 0) {
    const std::uint64_t k = threshold_ - 1;
    const bool inPrefix = member(prefix_, k);
    const bool inPattern = member(residues_, k % period_);
    if (inPrefix != inPattern) break;
    if (inPrefix) prefix_.pop_back();
    --threshold_;
  }
}

namespace {

std::uint64_t lcmCapped(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t l = a / g * b;
  if (l > UPSet::kLimit)
    throw std::length_error("UPSet: combined period exceeds limit");
  return l;
}

template <typename Op>
UPSet combine(const UPSet& a, const UPSet& b, Op op) {
  const std::uint64_t t = std::max(a.threshold(), b.threshold());
  const std::uint64_t l = lcmCapped(a.period(), b.period());
  std::vector<std::uint64_t> prefix;
  for (std::uint64_t k = 0; k < t; ++k)
    if (op(a.contains(k), b.contains(k))) prefix.push_back(k);
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < l; ++r) {
    // Representative of the class r mod l at or beyond the threshold.
    const std::uint64_t k = t + (r + l - t % l) % l;
    if (op(a.contains(k), b.contains(k))) residues.push_back(r);
  }
  return UPSet(t, std::move(prefix), l, std::move(residues));
}

}  // namespace

UPSet unionOf(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

UPSet intersect(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

UPSet difference(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

UPSet complement(const UPSet& a) {
  std::vector<std::uint64_t> prefix;
  for (std::uint64_t k = 0; k < a.threshold(); ++k)
    if (!a.contains(k)) prefix.push_back(k);
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < a.period(); ++r)
    if (!member(a.residues(), r)) residues.push_back(r);
  return UPSet(a.threshold(), std::move(prefix), a.period(), std::move(residues));
}

bool subsetOf(const UPSet& a, const UPSet& b) {
  return difference(a, b).isEmpty();
}

bool almostSubset(const UPSet& a, const UPSet& b) {
  return difference(a, b).finite();
}

bool almostEqual(const UPSet& a, const UPSet& b) {
  return almostSubset(a, b) && almostSubset(b, a);
}

bool compatible(const UPSet& a, const UPSet& b) {
  return intersect(a, b).infinite();
}

namespace {

// Elements of a whose index within a is j mod m, as an UPSet. The index
// parity pattern repeats every m*period positions from the threshold on,
// because each period contributes the same element count.
UPSet indexResidueSubset(const UPSet& a, std::uint64_t m, std::uint64_t j) {
  const std::uint64_t stretch = a.period() * m;
  if (stretch > UPSet::kLimit)
    throw std::length_error("UPSet: period exceeds limit in split");
  const std::uint64_t t = a.threshold() + stretch;
  std::uint64_t rank = 0;
  std::vector<std::uint64_t> prefix;
  for (std::uint64_t k = 0; k < t; ++k)
    if (a.contains(k)) {
      if (rank % m == j) prefix.push_back(k);
      ++rank;
    }
  std::vector<std::uint64_t> residues;
  for (std::uint64_t k = t; k < t + stretch; ++k)
    if (a.contains(k)) {
      if (rank % m == j) residues.push_back(k % stretch);
      ++rank;
    }
  return UPSet(t, std::move(prefix), stretch, std::move(residues));
}

}  // namespace

std::pair<UPSet, UPSet> split(const UPSet& a) {
  if (a.finite()) throw std::invalid_argument("split: input must be infinite");
  return {indexResidueSubset(a, 2, 0), indexResidueSubset(a, 2, 1)};
}

SmLeqVerdict smLeqWitness(const UPSet& a, const UPSet& b) {
  if (a.finite() || b.finite())
    throw std::invalid_argument("smLeqWitness: both arguments must be infinite");
  if (!almostSubset(a, b)) return {false, difference(a, b)};
  // Sample validation: every infinite subset of a must meet b infinitely.
  // The sample is deterministic: split halves and index-residue thirds.
  std::vector<UPSet> sample{a};
  const auto halves = split(a);
  sample.push_back(halves.first);
  sample.push_back(halves.second);
  for (std::uint64_t j = 0; j < 3; ++j)
    sample.push_back(indexResidueSubset(a, 3, j));
  for (const auto& c : sample)
    if (!compatible(c, b))
      throw std::logic_error("smLeqWitness: sample subset escaped the bound");
  return {true, std::nullopt};
}

UPSet chainLowerBound(const std::vector<UPSet>& chain) {
  if (chain.empty())
    throw std::invalid_argument("chainLowerBound: chain must be nonempty");
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i].finite())
      throw std::invalid_argument("chainLowerBound: chain element " +
                                  std::to_string(i) + " is finite");
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (!almostSubset(chain[j], chain[i]))
        throw std::invalid_argument(
            "chainLowerBound: chain is not almostSubset-decreasing between "
            "indices " +
            std::to_string(i) + " and " + std::to_string(j));
  UPSet bound = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) bound = intersect(bound, chain[i]);
  if (bound.finite())
    throw std::logic_error("chainLowerBound: intersection collapsed to a finite set");
  return bound;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool peekIs(char c) {
    skipSpace();
    return pos < text.size() && text[pos] == c;
  }

  bool consume(char c) {
    if (!peekIs(c)) return false;
    ++pos;
    return true;
  }

  void expect(char c) {
    if (!consume(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  bool consumeWord(const std::string& word) {
    skipSpace();
    if (text.compare(pos, word.size(), word) != 0) return false;
    pos += word.size();
    return true;
  }

  std::uint64_t number() {
    skipSpace();
    const std::size_t start = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected a number", pos);
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > UPSet::kLimit)
        throw ParseError("number exceeds limit " + std::to_string(UPSet::kLimit),
                         start);
      ++pos;
    }
    return value;
  }

  std::vector<std::uint64_t> numberSetBraces() {
    expect('{');
    std::vector<std::uint64_t> values;
    if (!peekIs('}')) {
      values.push_back(number());
      while (consume(',')) values.push_back(number());
    }
    expect('}');
    return values;
  }

  UPSet primary() {
    skipSpace();
    if (consume('(')) {
      UPSet inner = expr();
      expect(')');
      return inner;
    }
    if (consumeWord("fin")) return UPSet::finiteSet(numberSetBraces());
    if (consumeWord("mod")) {
      expect('(');
      const std::size_t periodPos = pos;
      skipSpace();
      const std::uint64_t p = number();
      if (p == 0) throw ParseError("period must be positive", periodPos);
      expect(',');
      const std::size_t setPos = pos;
      auto residues = numberSetBraces();
      for (std::uint64_t r : residues)
        if (r >= p)
          throw ParseError("residue " + std::to_string(r) + " not below period " +
                               std::to_string(p),
                           setPos);
      expect(')');
      return UPSet::mod(p, std::move(residues));
    }
    if (consumeWord("omega")) return UPSet::omega();
    throw ParseError("expected fin{...}, mod(...), omega or a parenthesis", pos);
  }

  UPSet unary() {
    if (consume('~')) return complement(unary());
    return primary();
  }

  UPSet intersection() {
    UPSet value = unary();
    while (consume('&')) value = intersect(value, unary());
    return value;
  }

  UPSet differenceChain() {
    UPSet value = intersection();
    while (consume('\\')) value = difference(value, intersection());
    return value;
  }

  UPSet expr() {
    UPSet value = differenceChain();
    while (consume('|')) value = unionOf(value, differenceChain());
    return value;
  }
};

std::string renderSet(const std::vector<std::uint64_t>& values) {
  std::string out = "fin{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position(position) {}

UPSet parseUPSet(const std::string& text) {
  Parser parser(text);
  UPSet value = parser.expr();
  parser.skipSpace();
  if (parser.pos != text.size())
    throw ParseError("unexpected trailing input", parser.pos);
  return value;
}

std::string render(const UPSet& a) {
  if (a.finite()) return renderSet(a.prefix());
  std::string base;
  if (a.period() == 1) {
    base = "omega";
  } else {
    base = "mod(" + std::to_string(a.period()) + ",{";
    for (std::size_t i = 0; i < a.residues().size(); ++i) {
      if (i) base += ",";
      base += std::to_string(a.residues()[i]);
    }
    base += "})";
  }
  // Prefix corrections against the periodic pattern: dropped positions below
  // the threshold and extra ones.
  std::vector<std::uint64_t> dropped, extra;
  for (std::uint64_t k = 0; k < a.threshold(); ++k) {
    const bool pattern = member(a.residues(), k % a.period());
    const bool present = a.contains(k);
    if (pattern && !present) dropped.push_back(k);
    if (!pattern && present) extra.push_back(k);
  }
  std::string out = base;
  if (!dropped.empty()) out += " \\ " + renderSet(dropped);
  if (!extra.empty()) out = renderSet(extra) + " | " + out;
  return out;
}

}  // namespace homogkit
