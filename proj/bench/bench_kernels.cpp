#include <benchmark/benchmark.h>

#include "parcat/alignment.hpp"
#include "parcat/subword.hpp"
#include "parcat/tamari.hpp"

using namespace parcat;

namespace {

void BM_AvoidingSerial(benchmark::State& st) {
  const JContext ctx(static_cast<int>(st.range(0)), {2});
  for (auto _ : st) benchmark::DoNotOptimize(avoiding_elements_serial(ctx));
}

void BM_AvoidingParallel(benchmark::State& st) {
  const JContext ctx(static_cast<int>(st.range(0)), {2});
  for (auto _ : st) benchmark::DoNotOptimize(avoiding_elements(ctx));
}

const AlignmentContext& h4_context() {
  static const AlignmentContext ctx = [] {
    const auto sys = CoxeterSystem::make(CoxeterType::H, 4);
    return build_context(sys, c_sorting_word(sys, longest_element(sys), {0, 1, 2, 3}));
  }();
  return ctx;
}

void BM_AlignedSerial(benchmark::State& st) {
  const auto& ctx = h4_context();
  for (auto _ : st) benchmark::DoNotOptimize(aligned_indices_serial(ctx));
}

void BM_AlignedParallel(benchmark::State& st) {
  const auto& ctx = h4_context();
  for (auto _ : st) benchmark::DoNotOptimize(aligned_indices(ctx));
}

const std::vector<Facet>& f4_facets() {
  static const std::vector<Facet> fs = [] {
    const auto sys = CoxeterSystem::make(CoxeterType::F, 4);
    return facets(cluster_complex(sys, {}, {0, 1, 2, 3}));
  }();
  return fs;
}

void BM_FlipGraphSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(flip_graph_serial(f4_facets()));
}

void BM_FlipGraphParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(flip_graph(f4_facets()));
}

}  // namespace

BENCHMARK(BM_AvoidingSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AvoidingParallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlignedSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlignedParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlipGraphSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlipGraphParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
