#include <benchmark/benchmark.h>

#include <rsumlab/enumerate.hpp>
#include <rsumlab/mask_kernel.hpp>
#include <rsumlab/sumset.hpp>
#include <rsumlab/verify.hpp>

using namespace rsumlab;

namespace {

void BM_SumsetElementSet(benchmark::State& state) {
  const auto g = make_group({static_cast<std::uint64_t>(state.range(0))});
  SplitMix64 rng(1);
  const auto a = sample_subset(g, g.order() / 3, rng);
  const auto b = sample_subset(g, g.order() / 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, b));
}
BENCHMARK(BM_SumsetElementSet)->Arg(64)->Arg(256)->Arg(1024);

void BM_GeneralizedElementSet(benchmark::State& state) {
  const auto g = make_group({static_cast<std::uint64_t>(state.range(0))});
  SplitMix64 rng(2);
  const auto a = sample_subset(g, g.order() / 3, rng);
  const auto b = sample_subset(g, g.order() / 3, rng);
  const auto s = sample_subset(g, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_restricted_sumset(a, b, s));
}
BENCHMARK(BM_GeneralizedElementSet)->Arg(64)->Arg(256)->Arg(1024);

void BM_BuildRows(benchmark::State& state) {
  const MaskGroup mg(make_group({static_cast<std::uint64_t>(state.range(0))}));
  const Mask a = 0x5a5a5a5a5a5a5a5aull & mg.full(), s = 0b1011;
  for (auto _ : state) benchmark::DoNotOptimize(build_rows(mg, a, s));
}
BENCHMARK(BM_BuildRows)->Arg(16)->Arg(64);

void BM_RowsEvaluate(benchmark::State& state) {
  const MaskGroup mg(make_group({64}));
  const auto rows = build_rows(mg, 0x00ff00ff00ff00ffull, 0b111);
  Mask b = 0x0123456789abcdefull;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rows.evaluate(b));
    b = b * 6364136223846793005ull + 1442695040888963407ull;
  }
}
BENCHMARK(BM_RowsEvaluate);

// One (A, S) against every nonempty B.
void BM_SubsetSweepMinBySize(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const MaskGroup mg(make_group({n}));
  SubsetSweep sweep(n, {1, SizeRange::kUpToOrder});
  const auto rows = build_rows(mg, 0b1011, 0b11);
  std::array<std::uint8_t, 65> mins{};
  for (auto _ : state) {
    sweep.min_by_size(rows, mins);
    benchmark::DoNotOptimize(mins);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * ((std::int64_t{1} << n) - 1));
}
BENCHMARK(BM_SubsetSweepMinBySize)->Arg(12)->Arg(16)->Arg(20);

void BM_SubsetSweepForEach(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const MaskGroup mg(make_group({n}));
  SubsetSweep sweep(n, {1, SizeRange::kUpToOrder});
  const auto rows = build_rows(mg, 0b1011, 0b11);
  for (auto _ : state) {
    std::uint64_t total = 0;
    sweep.for_each(rows, [&](Mask, unsigned size) { total += size; });
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * ((std::int64_t{1} << n) - 1));
}
BENCHMARK(BM_SubsetSweepForEach)->Arg(12)->Arg(16);

void BM_ExhaustiveVerify(benchmark::State& state) {
  VerifyOptions opt{EnumerationPlan{make_group({static_cast<std::uint64_t>(state.range(0))})}};
  opt.plan.s_size = {0, 2};
  opt.kinds = {BoundKind::ThreeS, BoundKind::PrimePower};
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_verify(opt));
}
BENCHMARK(BM_ExhaustiveVerify)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
