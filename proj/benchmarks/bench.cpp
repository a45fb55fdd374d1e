// Microbenchmarks for the hot paths: stable-cutset search, membership
// recognition, and graph6 decoding.

#include <benchmark/benchmark.h>

#include <vector>

#include "gsc/cutset.hpp"
#include "gsc/generating.hpp"
#include "gsc/graph6.hpp"
#include "gsc/recognize.hpp"

namespace {

std::vector<gsc::Graph> members(int pieces, int count) {
  std::vector<gsc::Graph> out;
  out.reserve(count);
  for (int seed = 0; seed < count; ++seed)
    out.push_back(gsc::build(gsc::random_gsc(pieces, static_cast<std::uint64_t>(seed))));
  return out;
}

void bm_stable_cutset_members(benchmark::State& state) {
  auto graphs = members(static_cast<int>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    auto cert = gsc::find_stable_cutset(graphs[i++ % graphs.size()]);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(bm_stable_cutset_members)->Arg(2)->Arg(4)->Arg(6);

void bm_recognize_members(benchmark::State& state) {
  auto graphs = members(static_cast<int>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    auto result = gsc::recognize(graphs[i++ % graphs.size()]);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(bm_recognize_members)->Arg(2)->Arg(4)->Arg(6);

void bm_graph6_decode(benchmark::State& state) {
  std::vector<std::string> lines;
  for (const auto& g : members(5, 64)) lines.push_back(gsc::to_graph6(g));
  std::size_t i = 0;
  for (auto _ : state) {
    auto g = gsc::from_graph6(lines[i++ % lines.size()]);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(bm_graph6_decode);

}  // namespace

BENCHMARK_MAIN();
