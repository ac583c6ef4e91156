#include <benchmark/benchmark.h>

#include "tutte/cli.hpp"
#include "tutte/crapo.hpp"
#include "tutte/kernels.hpp"

using namespace tutte;

namespace {

Ideal ideal(const char* spec) { return cli::ideal_from_json(nlohmann::json::parse(spec)); }

const Ideal& b6() {
  static const Ideal I = ideal(R"({"type": "B6", "boxes": [[1,4],[2,0],[4,-5]]})");
  return I;
}

const Ideal& e6() {
  static const Ideal I = ideal(
      R"({"type": "E6", "roots": [[1,1,1,2,1,0],[1,1,1,2,1,1],[1,1,2,2,1,0],[1,1,2,2,1,1],)"
      R"([1,1,1,2,2,1],[1,1,2,2,2,1],[1,1,2,3,2,1],[1,2,2,3,2,1]]})");
  return I;
}

void BM_PointProfileSerial(benchmark::State& state) {
  const auto hs = arrangement_of(b6()).tuples;
  for (auto _ : state) benchmark::DoNotOptimize(point_profile_serial(hs, 6, state.range(0)));
}

void BM_PointProfileParallel(benchmark::State& state) {
  const auto hs = arrangement_of(b6()).tuples;
  for (auto _ : state) benchmark::DoNotOptimize(point_profile_parallel(hs, 6, state.range(0)));
}

BlockPartition b6_partition() { return partition_in_accordance(complement_of(b6())); }

void BM_BlockProfileReference(benchmark::State& state) {
  const auto bp = b6_partition();
  for (auto _ : state) benchmark::DoNotOptimize(block_profile_reference(bp, state.range(0)));
}

void BM_BlockProfileParallel(benchmark::State& state) {
  const auto model = block_model(b6_partition());
  for (auto _ : state) benchmark::DoNotOptimize(block_profile_parallel(model, state.range(0)));
}

void BM_CrapoSerial(benchmark::State& state) {
  const auto cfg = VectorConfig::of_ideal(e6());
  for (auto _ : state) benchmark::DoNotOptimize(tutte_crapo_serial(cfg));
}

void BM_CrapoParallel(benchmark::State& state) {
  const auto cfg = VectorConfig::of_ideal(e6());
  for (auto _ : state) benchmark::DoNotOptimize(tutte_crapo(cfg));
}

}  // namespace

BENCHMARK(BM_PointProfileSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointProfileParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockProfileReference)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockProfileParallel)->Arg(5)->Arg(7)->Arg(17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrapoSerial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_CrapoParallel)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
