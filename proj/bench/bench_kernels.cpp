// Parallel kernels against the serial brute-force reference.
//   ./permsum_bench --benchmark_filter=Values

#include <benchmark/benchmark.h>

#include <thread>

#include "permsum/search.hpp"
#include "reference.hpp"

using namespace permsum;

namespace {

int hw() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

void BM_ValuesReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::all_values(Functional::kDif, n));
}

void BM_ValuesKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EnumerateOptions o;
  o.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_values(Functional::kDif, n, o));
}

void BM_ValuesKernelBignum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EnumerateOptions o;
  o.force_bignum = true;
  o.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_values(Functional::kDif, n, o));
}

// Nonexistence needs the whole space, so these measure full exhaustion.
void BM_ExhaustReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::all_witnesses(Functional::kCycSqDif, n, Rational(0)));
  }
}

void BM_ExhaustKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SearchOptions o;
  o.workers = static_cast<int>(state.range(1));
  o.prune = state.range(2) != 0;
  for (auto _ : state) {
    SearchResult r = find_witness(Functional::kCycSqDif, n, Rational(0), o);
    state.counters["nodes"] = static_cast<double>(r.nodes);
  }
}

void BM_FindCycSqDif(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SearchOptions o;
  o.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(Functional::kCycSqDif, n, Rational(0), o));
}

void worker_args(benchmark::internal::Benchmark* b, std::initializer_list<int> sizes) {
  for (int n : sizes) {
    b->Args({n, 1});
    if (hw() > 1) b->Args({n, hw()});
  }
}

}  // namespace

BENCHMARK(BM_ValuesReference)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValuesKernel)->Apply([](auto* b) { worker_args(b, {7, 8, 9}); })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValuesKernelBignum)->Apply([](auto* b) { worker_args(b, {7, 8}); })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustReference)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustKernel)
    ->Apply([](auto* b) {
      for (int n : {9, 10}) {
        for (int prune : {0, 1}) {
          b->Args({n, 1, prune});
          if (hw() > 1) b->Args({n, hw(), prune});
        }
      }
    })
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindCycSqDif)->Apply([](auto* b) { worker_args(b, {12, 13}); })->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
