#include <benchmark/benchmark.h>

#include "bohr/functions.hpp"
#include "bohr/series.hpp"

namespace {

void BM_SeriesMul(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto f = bohr::expand(bohr::random_blaschke(6, 1), order);
  const auto g = bohr::expand(bohr::random_schur(6, 2), order);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::series_mul(f, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SeriesDiv(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto f = bohr::expand(bohr::random_blaschke(6, 1), order);
  // Dense denominator with constant term bounded away from zero.
  auto d = bohr::expand(bohr::random_schur(6, 2), order);
  std::vector<bohr::Complex> c(d.coeffs().begin(), d.coeffs().end());
  c[0] += 2.0;
  const bohr::CoeffSeries den(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(bohr::series_div(f, den));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesDiv)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ExpandBlaschke(benchmark::State& state) {
  const auto spec = bohr::random_blaschke(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::expand(spec, 256));
}
BENCHMARK(BM_ExpandBlaschke)->DenseRange(2, 8, 2);

void BM_ExpandSchur(benchmark::State& state) {
  const auto spec = bohr::random_schur(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::expand(spec, 256));
}
BENCHMARK(BM_ExpandSchur)->DenseRange(2, 8, 2);

}  // namespace
