#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cutdiag/chen.hpp"
#include "cutdiag/concordance.hpp"
#include "cutdiag/group.hpp"
#include "cutdiag/magnus.hpp"
#include "cutdiag/moves.hpp"
#include "cutdiag/parse_io.hpp"

using namespace cutdiag;

namespace {

CutDiagram load(const std::string& name) {
  std::ifstream in(std::string(CUTDIAG_DATA_DIR) + "/" + name + ".cut");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cut(ss.str());
}

// a long diagram obtained by walking away from the Borromean rings
const CutDiagram& grown() {
  static const CutDiagram d = random_walk(load("borromean"), 40, 17);
  return d;
}

}  // namespace

static void BM_MilnorTable(benchmark::State& state) {
  const CutDiagram d = load("borromean");
  const int maxlen = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(milnor_table(d, maxlen));
}
BENCHMARK(BM_MilnorTable)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_MilnorTableGrown(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(milnor_table(grown(), 4));
  state.counters["cutpoints"] = static_cast<double>(grown().num_cutpoints(1) + grown().num_cutpoints(2) +
                                                    grown().num_cutpoints(3));
}
BENCHMARK(BM_MilnorTableGrown)->Unit(benchmark::kMillisecond);

static void BM_ReducedTable(benchmark::State& state) {
  const CutDiagram d = load("whitehead");
  for (auto _ : state) benchmark::DoNotOptimize(reduced_milnor_table(d, 6));
}
BENCHMARK(BM_ReducedTable)->Unit(benchmark::kMillisecond);

static void BM_ChenMapWords(benchmark::State& state) {
  const CutDiagram& d = grown();
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ChenMap eta(d, canonical_network(d), q);
    benchmark::DoNotOptimize(eta(longitude(d, 1)));
  }
}
BENCHMARK(BM_ChenMapWords)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

static void BM_ChenSeries(benchmark::State& state) {
  const CutDiagram& d = grown();
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ChenSeries s(d, canonical_network(d), q);
    benchmark::DoNotOptimize(s(longitude(d, 1)));
  }
}
BENCHMARK(BM_ChenSeries)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateMoves(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_moves(grown()));
}
BENCHMARK(BM_EnumerateMoves)->Unit(benchmark::kMicrosecond);

static void BM_VerifyTrace(benchmark::State& state) {
  const CutDiagram d = load("whitehead");
  const Walk w = random_walk_trace(d, static_cast<int>(state.range(0)), 5);
  const Certificate c = build_trace(d, w.moves);
  for (auto _ : state) benchmark::DoNotOptimize(verify(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.events.size()));
}
BENCHMARK(BM_VerifyTrace)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
