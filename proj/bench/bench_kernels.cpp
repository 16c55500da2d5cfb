#include <benchmark/benchmark.h>

#include "zeroroot/kernels.hpp"

using namespace zeroroot;

static ModelParams chain(int two_n) {
  ModelParams m;
  m.two_n = two_n;
  m.a_bar = 0.66;
  m.p = 1.2;
  m.q = 0.7 * std::sqrt(1 + 1.44);
  m.xi = 1.2;
  return m;
}

static void transfer_serial(benchmark::State& st) {
  const auto m = chain(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::build_transfer_serial(cplx(0.3, 0.2), m, true));
}
static void transfer_parallel(benchmark::State& st) {
  const auto m = chain(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::build_transfer_parallel(cplx(0.3, 0.2), m, true));
}
static void hamiltonian_serial(benchmark::State& st) {
  const auto m = chain(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::build_hamiltonian_serial(m));
}
static void hamiltonian_parallel(benchmark::State& st) {
  const auto m = chain(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::build_hamiltonian_parallel(m));
}

BENCHMARK(transfer_serial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(transfer_parallel)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(hamiltonian_serial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(hamiltonian_parallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
