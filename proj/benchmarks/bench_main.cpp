#include <benchmark/benchmark.h>

#include "bogomolov/certificate.hpp"
#include "bogomolov/cohomology.hpp"
#include "bogomolov/howell.hpp"
#include "bogomolov/tate.hpp"

namespace {

using namespace bogo;

GroupPtr homocyclic(std::size_t q, std::size_t t) {
  Product p = direct_product(cyclic_group(q), cyclic_group(q));
  GroupPtr g = p.group;
  for (std::size_t i = 2; i < t; ++i) g = direct_product(g, cyclic_group(q)).group;
  return g;
}

void BM_h2_homocyclic(benchmark::State& state) {
  GroupPtr g = homocyclic(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(h2_qz(g).h2_qz);
  state.SetLabel("order " + std::to_string(g->order()));
}
BENCHMARK(BM_h2_homocyclic)->Args({2, 4})->Args({4, 3})->Args({2, 6})->Unit(benchmark::kMillisecond);

void BM_b0_homocyclic(benchmark::State& state) {
  GroupPtr g = homocyclic(state.range(0), state.range(1));
  EngineOptions opt;
  opt.threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(b0(g, opt).invariants);
}
BENCHMARK(BM_b0_homocyclic)->Args({2, 4, 1})->Args({4, 3, 1})->Args({4, 3, 4})->Unit(benchmark::kMillisecond);

void BM_howell(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const std::uint64_t m = 720;
  std::vector<linalg::ModRow> rows(n, linalg::ModRow(n));
  std::uint64_t x = 12345;
  for (auto& r : rows)
    for (auto& v : r) v = (x = x * 6364136223846793005ULL + 1442695040888963407ULL) >> 33 & 1023;
  for (auto _ : state) {
    linalg::ModSpan s(n, m);
    s.insert_all(rows);
    benchmark::DoNotOptimize(s.basis());
  }
}
BENCHMARK(BM_howell)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_certificate(benchmark::State& state) {
  const bool saltman = state.range(0) == 0;
  CentralFamily f = saltman ? CentralFamily::saltman(2, state.range(1)) : CentralFamily::thm54(2, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(b0_lower_bound_certificate(f).certified);
  state.SetLabel(f.name() + " 2 " + std::to_string(state.range(1)));
}
BENCHMARK(BM_certificate)->Args({0, 1})->Args({1, 1})->Unit(benchmark::kMillisecond);

void BM_flabby_regular(benchmark::State& state) {
  GroupPtr g = homocyclic(2, 3);
  GLattice m = regular_lattice(g);
  for (auto _ : state) benchmark::DoNotOptimize(flabby_report(m).is_flabby);
}
BENCHMARK(BM_flabby_regular)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
