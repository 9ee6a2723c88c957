// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: state construction (long-tailed
// distributions), the falling-factorial moment engine, full witness rows and
// Monte-Carlo sampling throughput.

#include <benchmark/benchmark.h>

#include <random>

#include "focknc/moments.hpp"
#include "focknc/montecarlo.hpp"
#include "focknc/states.hpp"
#include "focknc/witnesses.hpp"

namespace {

using namespace focknc;

void bm_make_nbs_tail(benchmark::State& bench) {
  // Small eta stretches the support; exercises the tail-bound cutoff search.
  const double eta = 1.0 / static_cast<double>(bench.range(0));
  for (auto _ : bench) {
    benchmark::DoNotOptimize(make_nbs(eta, 5));
  }
}
BENCHMARK(bm_make_nbs_tail)->Arg(4)->Arg(16)->Arg(64);

void bm_make_gbs(benchmark::State& bench) {
  for (auto _ : bench) {
    benchmark::DoNotOptimize(make_gbs(5.0, 5.0, static_cast<double>(bench.range(0))));
  }
}
BENCHMARK(bm_make_gbs)->Arg(5)->Arg(30);

void bm_moment(benchmark::State& bench) {
  const FockState s = make_nbs(1.0 / static_cast<double>(bench.range(0)), 5);
  const MomentKey key{6, 6};
  for (auto _ : bench) {
    benchmark::DoNotOptimize(moment(s, key));
  }
  bench.counters["dim"] = static_cast<double>(s.dimension());
}
BENCHMARK(bm_moment)->Arg(4)->Arg(16)->Arg(64);

void bm_witness_row(benchmark::State& bench) {
  // The six-entry reference row: d(3), d(5), d_h(3), d_h(5), S(4), S(6).
  const FockState s = make_gbs(5.0, 5.0, 5.0);
  for (auto _ : bench) {
    double acc = hoa_d(s, 3) + hoa_d(s, 5) + hosps_dh(s, 3) + hosps_dh(s, 5) +
                 hos_shm(s, 4) + hos_shm(s, 6);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(bm_witness_row);

void bm_sampling(benchmark::State& bench) {
  const FockState s = make_gbs(5.0, 5.0, 5.0);
  const auto cdf = cumulative_distribution(s);
  std::mt19937_64 rng(12345);
  for (auto _ : bench) {
    benchmark::DoNotOptimize(sample_photon_number(cdf, rng));
  }
  bench.SetItemsProcessed(static_cast<int64_t>(bench.iterations()));
}
BENCHMARK(bm_sampling);

void bm_estimate_hoa(benchmark::State& bench) {
  const FockState s = make_gbs(5.0, 5.0, 5.0);
  for (auto _ : bench) {
    benchmark::DoNotOptimize(estimate_hoa(s, 3, 10000, 7, 20));
  }
}
BENCHMARK(bm_estimate_hoa);

}  // namespace

BENCHMARK_MAIN();
