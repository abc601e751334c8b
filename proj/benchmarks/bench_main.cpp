#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homogkit/embedding.hpp"
#include "homogkit/fixtures.hpp"
#include "homogkit/homogeneity.hpp"
#include "homogkit/poset.hpp"
#include "homogkit/structure.hpp"
#include "homogkit/upset.hpp"

namespace {

using namespace homogkit;

void BM_EmbeddingsPathIntoCycle(benchmark::State& state) {
  const BinaryStructure x = fixture("Pn", {3});
  const BinaryStructure y = fixture("Cn", {static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(embeddings(x, y));
}
BENCHMARK(BM_EmbeddingsPathIntoCycle)->DenseRange(6, 12, 2);

// Empty relations maximize the partial-isomorphism frontier, the worst case
// for the extension search.
void BM_UltrahomogeneityEmptyRelation(benchmark::State& state) {
  const BinaryStructure x(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isUltrahomogeneous(x));
}
BENCHMARK(BM_UltrahomogeneityEmptyRelation)->DenseRange(4, 7);

void BM_UltrahomogeneityStackedComplete(benchmark::State& state) {
  const BinaryStructure x =
      fixture("mKn", {static_cast<int>(state.range(0)), 3});
  for (auto _ : state) benchmark::DoNotOptimize(isUltrahomogeneous(x));
}
BENCHMARK(BM_UltrahomogeneityStackedComplete)->DenseRange(2, 3);

void BM_DecomposeReconstructed(benchmark::State& state) {
  const BinaryStructure x = reconstruct(Variant::ReC, fixture("C3", {}),
                                        static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(x));
}
BENCHMARK(BM_DecomposeReconstructed)->DenseRange(2, 4);

FinitePoset wovenPoset(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((i * 31 + j * 17) % 3 == 0) rel.emplace_back(labels[i], labels[j]);
  return FinitePoset(std::move(labels), rel);
}

void BM_SeparativeQuotient(benchmark::State& state) {
  const FinitePoset p = wovenPoset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(separativeQuotient(p));
}
BENCHMARK(BM_SeparativeQuotient)->DenseRange(8, 16, 4);

void BM_UpsetDifference(benchmark::State& state) {
  const UPSet a = UPSet::mod(120, {0, 7, 30, 44, 99});
  const UPSet b = UPSet::mod(84, {1, 7, 30, 63});
  for (auto _ : state) benchmark::DoNotOptimize(difference(a, b));
}
BENCHMARK(BM_UpsetDifference);

void BM_UpsetParseRender(benchmark::State& state) {
  const std::string text = "(mod(6,{1,3}) | fin{0,2,9}) & ~mod(4,{2})";
  for (auto _ : state) benchmark::DoNotOptimize(render(parseUPSet(text)));
}
BENCHMARK(BM_UpsetParseRender);

}  // namespace

BENCHMARK_MAIN();
