#include "adlv/latoracle.hpp"
#include "adlv/pi0.hpp"

#include <benchmark/benchmark.h>

using namespace adlv;

namespace {

void BM_RootSystem(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_gu(n).roots().size());
}
BENCHMARK(BM_RootSystem)->Arg(3)->Arg(5)->Arg(7);

void BM_HnClassify(benchmark::State& state) {
  const RootDatum d = make_gu(5);
  const Cochar mu{1, 1, 1, 0, 0, 1};
  const BRep b = b_x_compute(d, {1, 1, 0, 1, 0, 1}, LeviSubset({0, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(hn_classify(d, b, mu).hn_class);
}
BENCHMARK(BM_HnClassify);

void BM_Pi0(benchmark::State& state) {
  const RootDatum d = make_gl(static_cast<std::size_t>(state.range(0)));
  Cochar mu(d.rank(), 0);
  mu[0] = 1;
  const BRep b{mu, longest_element(d, LeviSubset::full(d.num_simple())), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(pi0_compute(d, mu, b).variant);
}
BENCHMARK(BM_Pi0)->DenseRange(2, 5);

void BM_IsetEnumerate(benchmark::State& state) {
  const RootDatum d = make_gu(5);
  const LeviSubset m({0, 3});
  const Cochar mu{1, 1, 1, 0, 0, 1};
  const BRep b = b_x_compute(d, {1, 1, 0, 1, 0, 1}, m);
  for (auto _ : state) benchmark::DoNotOptimize(iset_enumerate(d, mu, b, m).size());
}
BENCHMARK(BM_IsetEnumerate);

void BM_OracleWindow(benchmark::State& state) {
  OracleConfig cfg;
  cfg.n = 2;
  cfg.q = 2;
  cfg.depth = static_cast<int>(state.range(0));
  cfg.mu = {1, 0};
  cfg.b = make_brep(make_gl(2), {1, 0}, {0});
  std::size_t examined = 0;
  for (auto _ : state) examined = adlv_points(cfg, false).examined;
  state.counters["lattices"] = static_cast<double>(examined);
}
BENCHMARK(BM_OracleWindow)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
