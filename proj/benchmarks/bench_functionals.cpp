#include <benchmark/benchmark.h>

#include "bohr/functionals.hpp"
#include "bohr/functions.hpp"
#include "bohr/radius.hpp"
#include "bohr/report.hpp"

namespace {

void BM_EvalFunctional(benchmark::State& state) {
  const auto id = static_cast<bohr::FunctionalId>(state.range(0));
  const auto f = bohr::expand(bohr::ShiftedMobius{0.4}, 512);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::eval_functional(id, f, 0.5));
  state.SetLabel(std::string(bohr::to_string(id)));
}
BENCHMARK(BM_EvalFunctional)->DenseRange(0, 6);

void BM_BisectT2B(benchmark::State& state) {
  const auto family = bohr::make_family("mobius:" + std::to_string(state.range(0)), 0);
  bohr::BisectOptions opts;
  opts.order = 512;
  for (auto _ : state) benchmark::DoNotOptimize(bohr::bisect_radius(bohr::FunctionalId::T2B, family, opts));
}
BENCHMARK(BM_BisectT2B)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_VerifyT1(benchmark::State& state) {
  bohr::VerifyOptions opts;
  opts.family = "blaschke:100:6";
  opts.grid = "0:0.9:20";
  for (auto _ : state) benchmark::DoNotOptimize(bohr::cmd_verify(opts));
}
BENCHMARK(BM_VerifyT1)->Unit(benchmark::kMillisecond);

}  // namespace
