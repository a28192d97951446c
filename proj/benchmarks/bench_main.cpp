#include <benchmark/benchmark.h>

#include <memory>

#include "cantorspec/branching_sim.hpp"
#include "cantorspec/cantor_measure.hpp"
#include "cantorspec/exponent.hpp"
#include "cantorspec/model_gen.hpp"
#include "cantorspec/random_tree.hpp"
#include "cantorspec/string_solver.hpp"

using namespace cantorspec;

namespace {

IfsModel third_fifth() {
  IfsModel m;
  m.letters = {{"third", {{1.0 / 3, 0.0}, {1.0 / 3, 2.0 / 3}}, {0.5, 0.5}},
               {"fifth", {{0.2, 0.0}, {0.2, 0.4}, {0.2, 0.8}}, {1.0 / 3, 1.0 / 3, 1.0 / 3}}};
  m.probs = {0.6, 0.4};
  return m;
}

StieltjesString cantor_string(std::size_t depth) {
  const RandomTree t = sample_tree(third_fifth(), StopRule::at_depth(depth), 1);
  return StieltjesString::from_measure(atomize(build_cells(t, depth)));
}

void BM_CountDirichlet(benchmark::State& state) {
  const StieltjesString s = cantor_string(static_cast<std::size_t>(state.range(0)));
  double x = 1e5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_dirichlet(s, x));
    x *= 1.0000001;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * s.size()));
  state.counters["atoms"] = static_cast<double>(s.size());
}
BENCHMARK(BM_CountDirichlet)->Arg(6)->Arg(9)->Arg(12);

void BM_CountNeumann(benchmark::State& state) {
  const StieltjesString s = cantor_string(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_neumann(s, 1e5));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * s.size()));
}
BENCHMARK(BM_CountNeumann)->Arg(9)->Arg(12);

void BM_Eigenvalue(benchmark::State& state) {
  const StieltjesString s = cantor_string(8);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalue(s, 10, Boundary::Dirichlet));
}
BENCHMARK(BM_Eigenvalue);

void BM_RecursiveExponent(benchmark::State& state) {
  const IfsModel m = third_fifth();
  for (auto _ : state) benchmark::DoNotOptimize(solve_recursive_exponent(m));
}
BENCHMARK(BM_RecursiveExponent);

void BM_HomogeneousExponent(benchmark::State& state) {
  const IfsModel m = random_model(7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_homogeneous_exponent(m));
}
BENCHMARK(BM_HomogeneousExponent);

void BM_SampleTree(benchmark::State& state) {
  const auto m = std::make_shared<const IfsModel>(third_fifth());
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_tree(m, StopRule::resolution(1e-5), seed++).size());
}
BENCHMARK(BM_SampleTree);

void BM_Population(benchmark::State& state) {
  const auto m = std::make_shared<const IfsModel>(third_fifth());
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_population(m, 12.0, seed++).events.size());
}
BENCHMARK(BM_Population);

}  // namespace
BENCHMARK_MAIN();
