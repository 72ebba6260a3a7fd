#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ltree/constructions.hpp"
#include "ltree/tree.hpp"

using namespace ltree;

namespace {

const GroupDef& example1() {
  static const GroupDef g = hnn_stable(std::vector<std::string>{"a", "b"}, "ab");
  return g;
}

// Prefix-sharing finite words a^k b versus a^k c.
void BM_ComFinite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  FiniteWord x(n, Letter{0, false}), y(n, Letter{0, false});
  x.push_back({1, false});
  y.push_back({2, false});
  const Word u = Word::finite(1, x), v = Word::finite(1, y);
  for (auto _ : state) benchmark::DoNotOptimize(com_length(u, v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComFinite)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

// Offsets grow without bound; com must not depend on them.
void BM_ComHugeOffset(benchmark::State& state) {
  const BigInt offset = BigInt(1) << static_cast<unsigned>(state.range(0));
  const Word u = Word::tail(2, {{0, false}, {1, false}}, {{0, false}, {1, false}}, offset);
  const Word v = concat(u, Word::finite(2, {{2, false}}));
  for (auto _ : state) benchmark::DoNotOptimize(com_length(u, v));
}
BENCHMARK(BM_ComHugeOffset)->Arg(8)->Arg(64)->Arg(512);

void BM_ProductChain(benchmark::State& state) {
  const auto factors = static_cast<std::size_t>(state.range(0));
  ElementSampler sampler(example1(), 1);
  std::vector<GroupElem> elems;
  for (std::size_t i = 0; i < factors; ++i) elems.push_back(sampler.element(1));
  for (auto _ : state) {
    GroupElem g = identity(example1());
    for (const auto& e : elems) g = multiply(g, e);
    benchmark::DoNotOptimize(g);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductChain)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_Spine(benchmark::State& state) {
  ElementSampler sampler(example1(), 2);
  std::vector<GroupElem> elems;
  for (auto i = state.range(0); i > 0; --i) elems.push_back(sampler.element(1));
  for (auto _ : state) benchmark::DoNotOptimize(spine(example1(), elems));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Spine)->RangeMultiplier(2)->Range(2, 32)->Complexity();

}  // namespace
BENCHMARK_MAIN();
