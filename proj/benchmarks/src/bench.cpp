#include <benchmark/benchmark.h>

#include <keconvex/errors.hpp>
#include <keconvex/fano.hpp>
#include <keconvex/lie.hpp>
#include <keconvex/ma1d.hpp>
#include <keconvex/meanfield.hpp>
#include <keconvex/polytope.hpp>

#include <random>

using namespace keconvex;

namespace {

Polytope random_polytope(std::mt19937_64& rng, int dim, int points) {
  std::uniform_int_distribution<int> num(1, 24);
  std::uniform_int_distribution<int> den(1, 4);
  for (;;) {
    std::vector<RatVec> pts;
    for (int k = 0; k < points; ++k) {
      RatVec p(dim);
      for (int i = 0; i < dim; ++i) p[i] = Rat(num(rng), den(rng));
      pts.push_back(std::move(p));
    }
    try {
      return Polytope::from_vertices(dim, pts);
    } catch (const Error&) {
      continue;
    }
  }
}

void BM_volume_and_barycenter(benchmark::State& state) {
  std::mt19937_64 rng(17);
  int dim = static_cast<int>(state.range(0));
  auto p = random_polytope(rng, dim, dim + 6);
  for (auto _ : state) {
    auto vb = volume_and_barycenter(p);
    benchmark::DoNotOptimize(vb);
  }
}
BENCHMARK(BM_volume_and_barycenter)->Arg(2)->Arg(3)->Arg(4);

void BM_vertex_enumeration(benchmark::State& state) {
  std::mt19937_64 rng(23);
  int dim = static_cast<int>(state.range(0));
  auto p = random_polytope(rng, dim, dim + 6);
  for (auto _ : state) {
    auto v = h_to_v(p.h());
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_vertex_enumeration)->Arg(2)->Arg(3)->Arg(4);

void BM_ehrhart_check(benchmark::State& state) {
  auto p = Polytope::from_vertices(
      2, {{Rat(-1), Rat(-1)}, {Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
  for (auto _ : state) {
    auto v = ehrhart_check(p);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ehrhart_check);

void BM_solve_ma_1d(benchmark::State& state) {
  SolveConfig cfg;
  for (auto _ : state) {
    auto phi = solve_ma_1d(-1, 1, 0, cfg);
    benchmark::DoNotOptimize(phi);
  }
}
BENCHMARK(BM_solve_ma_1d)->Unit(benchmark::kMillisecond);

void BM_criticality_slope(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = criticality_slope(2, 3.0, 5, 15, 11);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_criticality_slope)->Unit(benchmark::kMillisecond);

void BM_snow_scan(benchmark::State& state) {
  int rank = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = snow_scan(rank);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_snow_scan)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_dh_integrate(benchmark::State& state) {
  auto a1 = build_root_system(Family::A, 1);
  auto seg = Polytope::from_vertices(1, {{Rat(1)}, {Rat(3)}});
  for (auto _ : state) {
    auto mass = dh_integrate(a1, seg);
    benchmark::DoNotOptimize(mass);
  }
}
BENCHMARK(BM_dh_integrate);

}  // namespace

BENCHMARK_MAIN();
