#include <benchmark/benchmark.h>

#include "symirr/chartab_io.hpp"
#include "symirr/plethysm.hpp"

using namespace symirr;

namespace {

TablePtr table(const char* file) { return load_table(std::string(SYMIRR_BENCH_DATA_DIR) + "/" + file); }

void BM_SymPowerSp43(benchmark::State& state) {
  const auto t = table("sp43.json");
  const auto f = t->irreducible(1);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sym_power(f, k));
}
BENCHMARK(BM_SymPowerSp43)->DenseRange(2, 8, 2);

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  Cyclotomic a, b;
  for (std::uint64_t i = 0; i < n; i += 2) a += Cyclotomic::root_of_unity(n, static_cast<std::int64_t>(i)) * Cyclotomic(static_cast<long>(i + 1));
  for (std::uint64_t i = 1; i < n; i += 4) b += Cyclotomic::root_of_unity(n, static_cast<std::int64_t>(i)) * Cyclotomic(static_cast<long>((i * i * 7 + 3) % 11) - 5);
  if (a.is_zero() || b.is_zero()) state.SkipWithError("degenerate operands");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(15)->Arg(60)->Arg(180);

void BM_ValidateTable(benchmark::State& state) {
  const auto t = table(state.range(0) == 0 ? "sp43.json" : "2j2.json");
  for (auto _ : state) benchmark::DoNotOptimize(validate_table(*t));
}
BENCHMARK(BM_ValidateTable)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
