#include "ctv/certificate.hpp"
#include "ctv/complex.hpp"
#include "ctv/direction.hpp"
#include "ctv/instance.hpp"
#include "ctv/lp.hpp"

#include <benchmark/benchmark.h>

using namespace ctv;

namespace {

LinearSystem random_system(std::uint64_t seed, size_t vars, long rows) {
  Rng rng(seed);
  LinearSystem sys;
  sys.num_vars = vars;
  for (long i = 0; i < rows; ++i) {
    std::vector<Rational> a(vars);
    for (auto& c : a) c = Rational(rng.range(-6, 6));
    sys.add(std::move(a), Rational(rng.range(-6, 6)), Rel::LE);
  }
  return sys;
}

void BM_lp_feasibility(benchmark::State& state) {
  std::vector<LinearSystem> systems;
  for (std::uint64_t s = 1; s <= 32; ++s)
    systems.push_back(random_system(s, static_cast<size_t>(state.range(0)), state.range(1)));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_feasibility(systems[i]));
    i = (i + 1) % systems.size();
  }
}
BENCHMARK(BM_lp_feasibility)->Args({3, 8})->Args({5, 12})->Args({8, 20});

void BM_cell_enumeration(benchmark::State& state) {
  Rng rng(7);
  std::vector<IntVec> normals;
  for (long i = 0; i < state.range(0); ++i) {
    IntVec n = {Int(rng.range(-20, 20)), Int(rng.range(-20, 20)), Int(rng.range(-20, 20))};
    if (is_zero(n)) n[0] = 1;
    normals.push_back(std::move(n));
  }
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_direction_cells(normals, 3));
}
BENCHMARK(BM_cell_enumeration)->Arg(4)->Arg(8)->Arg(12);

void BM_build_complex_2d(benchmark::State& state) {
  InstanceSpec spec;
  spec.d = 2, spec.k = 1, spec.r = 3, spec.members_per_color = 3;
  spec.kind = PolyKind::VPoly, spec.vpoly_vertices = 1;
  spec.coord_bound = 12, spec.spread = 1, spec.seed = 3;
  Instance inst = generate_instance(spec);
  for (auto _ : state) {
    auto C = build_complex(inst.family);
    benchmark::DoNotOptimize(annotate_cells(C, inst.family));
  }
}
BENCHMARK(BM_build_complex_2d);

void BM_verify_pipeline(benchmark::State& state) {
  InstanceSpec spec;
  spec.d = 2, spec.k = 1, spec.r = 3, spec.members_per_color = 4;
  spec.kind = PolyKind::Segments;
  spec.coord_bound = 12, spec.spread = 4, spec.hard = true;
  std::vector<Instance> insts;
  for (std::uint64_t s = 1; s <= 8; ++s) {
    spec.seed = s;
    insts.push_back(generate_instance(spec));
  }
  size_t i = 0;
  for (auto _ : state) {
    PartitionMatroid pm(insts[i].family.coloring);
    benchmark::DoNotOptimize(verify_theorem(insts[i].family, insts[i].ordering, pm));
    i = (i + 1) % insts.size();
  }
}
BENCHMARK(BM_verify_pipeline);

}  // namespace

BENCHMARK_MAIN();
