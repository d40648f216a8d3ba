// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP boundary integral on the shipped configs.
//   bench_integral --benchmark_filter=n2

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "wavecauchy/config.hpp"
#include "wavecauchy/parallel.hpp"
#include "wavecauchy/reconstruct.hpp"

using namespace wavecauchy;

namespace
{

struct Problem
{
  ApertureChart chart;
  CauchyDataSet data;
  KernelEvaluator kernel;
};

// Kernel at the sweep's second step; n = 3 tables are built once here, not
// inside the timed loop.
const Problem &Get(const std::string &config)
{
  static std::map<std::string, Problem> cache;
  auto it = cache.find(config);
  if (it == cache.end())
  {
    const ExperimentConfig c = LoadConfig(std::string(WAVECAUCHY_CONFIG_DIR) + "/" + config);
    ApertureChart chart = c.BuildChart();
    CauchyDataSet data = SampleCauchyData(*c.field, chart);
    const double h = c.sweep.h_max * c.sweep.ratio;
    KernelEvaluator kernel = MakeKernel(KernelParamsFor(c.kernel, h, chart));
    it = cache.emplace(config, Problem{std::move(chart), std::move(data), std::move(kernel)}).first;
  }
  return it->second;
}

void Serial(benchmark::State &state, const std::string &config)
{
  const Problem &p = Get(config);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(IntegralTermSerial(p.data, p.kernel, p.chart));
  }
}

void Parallel(benchmark::State &state, const std::string &config)
{
  const Problem &p = Get(config);
  parallel::SetNumThreads(static_cast<int>(state.range(0)));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(IntegralTerm(p.data, p.kernel, p.chart));
  }
  state.counters["threads"] = static_cast<double>(state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(Serial, n2, std::string("benchmark_theta20.json"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(Parallel, n2, std::string("benchmark_theta20.json"))
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(Serial, n3, std::string("scatterer_3d.json"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(Parallel, n3, std::string("scatterer_3d.json"))
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
