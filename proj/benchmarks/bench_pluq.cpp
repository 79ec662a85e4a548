#include <benchmark/benchmark.h>

#include "rpluq/kernels.hpp"
#include "rpluq/matgen.hpp"
#include "rpluq/oracle.hpp"
#include "rpluq/pluq.hpp"

using namespace rpluq;

namespace {

constexpr std::uint32_t kPrime = 1009;

// Counters are per call, so they read the same whatever the iteration count.
void report(benchmark::State& state, const OpCounts& c) {
  const auto per = static_cast<double>(state.iterations());
  state.counters["field_mul"] = static_cast<double>(c.field_mul) / per;
  state.counters["reductions"] = static_cast<double>(c.modular_reductions) / per;
}

// args: n, rank, threshold
void BM_PluqRecursive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = static_cast<std::size_t>(state.range(1));
  const auto threshold = static_cast<std::size_t>(state.range(2));
  const DenseMatrix a = matgen::gen_rank_deficient_leu(n, r, kPrime, 1);
  OpCounts counts;
  for (auto _ : state) {
    state.PauseTiming();
    DenseMatrix work = a;
    state.ResumeTiming();
    auto f = pluq(std::move(work), threshold, counts);
    benchmark::DoNotOptimize(f.rank);
  }
  report(state, counts);
}
BENCHMARK(BM_PluqRecursive)
    ->ArgsProduct({{128, 256, 512}, {0}, {30}})
    ->Args({256, 64, 30})
    ->Args({256, 128, 30})
    ->Args({256, 128, 1})
    ->Args({256, 128, 8})
    ->Args({256, 128, 64})
    ->Unit(benchmark::kMillisecond);

void BM_PluqFullRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix a = matgen::gen_full_rank_generic(n, kPrime, 1);
  OpCounts counts;
  for (auto _ : state) {
    state.PauseTiming();
    DenseMatrix work = a;
    state.ResumeTiming();
    auto f = pluq(std::move(work), 30, counts);
    benchmark::DoNotOptimize(f.rank);
  }
  report(state, counts);
}
BENCHMARK(BM_PluqFullRank)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_PluqIterative(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix a = matgen::gen_rank_deficient_leu(n, n / 2, kPrime, 1);
  OpCounts counts;
  for (auto _ : state) {
    state.PauseTiming();
    DenseMatrix work = a;
    state.ResumeTiming();
    auto f = pluq_base_case(std::move(work), counts);
    benchmark::DoNotOptimize(f.rank);
  }
  report(state, counts);
}
BENCHMARK(BM_PluqIterative)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);

void BM_PleRowMajor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix a = matgen::gen_full_rank_generic(n, kPrime, 1);
  OpCounts counts;
  for (auto _ : state) {
    state.PauseTiming();
    DenseMatrix work = a;
    state.ResumeTiming();
    auto f = oracle::ple_row_major(std::move(work), counts);
    benchmark::DoNotOptimize(f.rank);
  }
  report(state, counts);
}
BENCHMARK(BM_PleRowMajor)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_MatMulAcc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PrimeField f(kPrime);
  DenseMatrix c = matgen::gen_uniform(n, n, kPrime, 1);
  const DenseMatrix a = matgen::gen_uniform(n, n, kPrime, 2);
  const DenseMatrix b = matgen::gen_uniform(n, n, kPrime, 3);
  OpCounts counts;
  for (auto _ : state) {
    mm_acc(f, c.view(), a.view(), b.view(), counts);
    benchmark::ClobberMemory();
  }
  report(state, counts);
}
BENCHMARK(BM_MatMulAcc)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
