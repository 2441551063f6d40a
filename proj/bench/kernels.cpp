// Serial reference vs OpenMP kernels. The second argument selects the
// path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "hypgrp/boundary.hpp"
#include "hypgrp/isoperimetry.hpp"
#include "hypgrp/kernels.hpp"
#include "hypgrp/quasimetric.hpp"

using namespace hypgrp;

namespace {

  Execution mode(benchmark::State const& state) {
    return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
  }

  std::vector<double> random_plane(std::size_t n) {
    std::mt19937_64                        rng(7);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<double>                    x(n);
    std::vector<double>                    y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = coord(rng);
      y[i] = coord(rng);
    }
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::hypot(x[i] - x[j], y[i] - y[j]);
      }
    }
    return d;
  }

  void BM_TriangleRatio(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    auto const d = random_plane(n);
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::triangle_ratio(mode(state), d, n));
    }
  }

  void BM_UltrametricExcess(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    auto const d = random_plane(n);
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::ultrametric_excess(mode(state), d, n));
    }
  }

  void BM_MinPlusClosure(benchmark::State& state) {
    auto const n    = static_cast<std::size_t>(state.range(0));
    auto const base = random_plane(n);
    for (auto _ : state) {
      state.PauseTiming();
      auto d = base;
      state.ResumeTiming();
      kernels::min_plus_closure(mode(state), d, n);
      benchmark::DoNotOptimize(d.data());
    }
  }

  void BM_MassDoubling(benchmark::State& state) {
    auto const          n = static_cast<std::size_t>(state.range(0));
    auto const          d = random_plane(n);
    std::vector<double> w(n, 1.0);
    std::vector<double> radii;
    for (int k = 1; k <= 8; ++k) {
      radii.push_back(std::ldexp(1.0, -k));
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          kernels::mass_doubling(mode(state), d, n, w, radii));
    }
  }

  void BM_DoublingEstimate(benchmark::State& state) {
    PointCloud const line = PointCloud::integer_line(
        static_cast<std::size_t>(state.range(0)));
    auto const radii = dyadic_radii(line).radii;
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          doubling_constant_estimate(line, radii, mode(state)));
    }
  }

  void BM_BoundaryCloud(benchmark::State& state) {
    auto const b = boundary_approx(2, static_cast<std::size_t>(state.range(0)));
    VisualQuasimetric const v(std::log(3.0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(boundary_cloud(b, v, mode(state)));
    }
  }

  void BM_Scan(benchmark::State& state) {
    auto const  o = make_oracle(make_presentation("a", {"aaa"}));
    ScanOptions options;
    options.max_length = static_cast<std::size_t>(state.range(0));
    options.execution  = mode(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(hyperbolicity_scan(o, options));
    }
  }

}  // namespace

BENCHMARK(BM_TriangleRatio)->ArgsProduct({{128, 256}, {0, 1}});
BENCHMARK(BM_UltrametricExcess)->ArgsProduct({{128, 256}, {0, 1}});
BENCHMARK(BM_MinPlusClosure)->ArgsProduct({{256, 512}, {0, 1}});
BENCHMARK(BM_MassDoubling)->ArgsProduct({{512, 1024}, {0, 1}});
BENCHMARK(BM_DoublingEstimate)->ArgsProduct({{256}, {0, 1}});
BENCHMARK(BM_BoundaryCloud)->ArgsProduct({{5, 6}, {0, 1}});
BENCHMARK(BM_Scan)->ArgsProduct({{15}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
