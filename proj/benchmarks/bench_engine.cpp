#include "schubert/classes.hpp"
#include "schubert/euler.hpp"
#include "schubert/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace schubert;

namespace {

const char* const kTypes[] = {"A2", "A3", "B3", "G2", "A4"};

void BM_WeylEnumeration(benchmark::State& state)
{
  const auto rs = std::make_shared<const RootSystem>(RootSystem::from_label(kTypes[state.range(0)]));
  for (auto _ : state) {
    WeylGroup g(rs);
    benchmark::DoNotOptimize(g.size());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_WeylEnumeration)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_GkmLocalizations(benchmark::State& state)
{
  for (auto _ : state) {
    const auto lie = LieType::create(kTypes[state.range(0)]);
    benchmark::DoNotOptimize(&lie->gkm());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_GkmLocalizations)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_FullTable(benchmark::State& state)
{
  const auto lie = LieType::create(kTypes[state.range(0)]);
  lie->gkm();
  for (auto _ : state) {
    const auto x = FlagVariety::create(lie, {});
    x->table().materialize(1);
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_FullTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CharacteristicClasses(benchmark::State& state)
{
  const auto lie = LieType::create(kTypes[state.range(0)]);
  const auto warm = FlagVariety::create(lie, {});
  warm->table().materialize(1);
  for (auto _ : state) {
    const auto x = FlagVariety::create(lie, {});
    x->table().materialize(1);
    benchmark::DoNotOptimize(&x->ssm(x->top_cell()));
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_CharacteristicClasses)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_PositivitySweep(benchmark::State& state)
{
  const auto x = FlagVariety::create(kTypes[state.range(0)], {});
  x->ssm(x->top_cell());
  for (auto _ : state) {
    const TripleReport r = verify_positivity(*x, static_cast<unsigned>(state.range(1)));
    benchmark::DoNotOptimize(r.entries.data());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_PositivitySweep)->ArgsProduct({{1, 2, 3}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_ProjectiveOracle(benchmark::State& state)
{
  for (auto _ : state) {
    const OracleReport r = proj_cross_check(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r.checked);
  }
}
BENCHMARK(BM_ProjectiveOracle)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
