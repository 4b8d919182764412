#include "hyperzeta/pbw.hpp"
#include "hyperzeta/qcomb.hpp"
#include "hyperzeta/repn.hpp"

#include <benchmark/benchmark.h>

using namespace hyperzeta;

static void BM_CycMul(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto& f = CyclotomicField::get(ell);
  CycScalar x = f.zeta_pow(1) * make_rat(3, 7) + f.zeta_pow(2) * Rat(5) + f.one();
  CycScalar y = f.zeta_pow(ell - 1) * make_rat(-2, 3) + f.zeta_pow(3);
  for (auto _ : state) {
    x = x * y;
    benchmark::DoNotOptimize(x);
    x = x / y;
  }
}
BENCHMARK(BM_CycMul)->Arg(5)->Arg(13)->Arg(31);

static void BM_GaussBinom(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  std::int64_t m = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gauss_binom(40 + (m++ % 64), ell));
}
BENCHMARK(BM_GaussBinom)->Arg(5)->Arg(7);

static void BM_PbwMul(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto& f = CyclotomicField::get(ell);
  PBWElem x = PBWElem::monomial(ell, {ell + 1, 1, 1, 2 * ell}, f.one());
  PBWElem y = PBWElem::monomial(ell, {2 * ell + 1, 2, 0, ell + 2}, f.zeta_pow(1));
  for (auto _ : state) benchmark::DoNotOptimize(pbw_mul(x, y));
}
BENCHMARK(BM_PbwMul)->Arg(3)->Arg(5)->Arg(7);

static void BM_SpanClosure(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  auto m = simple_module((ell - 1) + 2 * ell, ell);
  for (auto _ : state) benchmark::DoNotOptimize(is_simple(m));
}
BENCHMARK(BM_SpanClosure)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Annihilator(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  auto m = restricted_simple(ell - 1, ell);
  for (auto _ : state) benchmark::DoNotOptimize(uzeta_annihilator(m));
}
BENCHMARK(BM_Annihilator)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
